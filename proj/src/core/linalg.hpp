// Copyright 2026 The dephase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Fixed-size complex matrices for one qubit (2x2) and the qubit pair (4x4),
// plus the density-matrix, Bloch-vector and amplitude views of a qubit state.
//
// Qubit ordering: qubit 1 (the system) is always the left tensor factor, so
// the joint basis index is 2 * system + environment.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

#include "core/error.hpp"

namespace dephase {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;
// Eigenvalues above -kEigenTol count as non-negative in positivity checks.
inline constexpr double kEigenTol = 1e-9;

template <std::size_t N>
class Matrix {
  static_assert(N == 2 || N == 4, "only one- and two-qubit matrices are supported");

 public:
  static constexpr std::size_t dim = N;

  constexpr Matrix() = default;

  // Row-major entries; the list must hold exactly N*N values.
  Matrix(std::initializer_list<Complex> entries) {
    require(entries.size() == N * N, Errc::dimension_mismatch, "matrix initializer has wrong entry count");
    std::size_t k = 0;
    for (const auto& e : entries) data_[k++] = e;
  }

  explicit Matrix(std::span<const Complex, N * N> entries) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] = entries[k];
  }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<Complex, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  std::span<const Complex, N * N> entries() const { return data_; }

  Matrix adjoint() const {
    Matrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : data_) s += std::norm(e);
    return std::sqrt(s);
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& e : data_) e *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{}) continue;
        for (std::size_t c = 0; c < N; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

 private:
  std::array<Complex, N * N> data_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

template <std::size_t N>
bool approx_equal(const Matrix<N>& a, const Matrix<N>& b, double tol = kDefaultTol) {
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (std::abs(a(r, c) - b(r, c)) > tol) return false;
  return true;
}

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double d = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
  return d;
}

// U * m * U^dagger
template <std::size_t N>
Matrix<N> conjugate(const Matrix<N>& u, const Matrix<N>& m) {
  return u * m * u.adjoint();
}

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
// Index 0..3 -> I, sigma_x, sigma_y, sigma_z.
Mat2 basis(std::size_t k);
}  // namespace pauli

// Spin operator I_k = sigma_k / 2 for k = z.
Mat2 spin_z();

Mat2 ket_bra(std::size_t row, std::size_t col);

Mat4 tensor(const Mat2& a, const Mat2& b);

// Trace over the second (environment) factor.
Mat2 partial_trace_env(const Mat4& m);

template <std::size_t N>
bool is_hermitian(const Matrix<N>& m, double tol = kDefaultTol) {
  return approx_equal(m, m.adjoint(), tol);
}

template <std::size_t N>
bool is_unitary(const Matrix<N>& m, double tol = kDefaultTol) {
  return approx_equal(m * m.adjoint(), Matrix<N>::identity(), tol);
}

// Ascending eigenvalues of a Hermitian matrix (closed form for 2x2).
std::array<double, 2> hermitian_eigenvalues(const Mat2& m);
std::array<double, 4> hermitian_eigenvalues(const Mat4& m);

struct Eigensystem2 {
  std::array<double, 2> values;
  std::array<std::array<Complex, 2>, 2> vectors;  // vectors[j] pairs with values[j]
};
Eigensystem2 hermitian_eigensystem(const Mat2& m);

template <std::size_t N>
bool is_density(const Matrix<N>& m, double tol = kDefaultTol) {
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - 1.0) > tol) return false;
  const double floor = -std::max(tol, kEigenTol);
  for (double ev : hermitian_eigenvalues(m))
    if (ev < floor) return false;
  return true;
}

template <std::size_t N>
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix<N>& m, double tol = kDefaultTol) : m_(m) {
    require(is_density(m, tol), Errc::invalid_state, "matrix is not a valid density matrix");
  }

  // For results of maps that preserve validity by construction.
  static DensityMatrix trusted(const Matrix<N>& m) { return DensityMatrix(m, Trusted{}); }

  const Matrix<N>& matrix() const { return m_; }

 private:
  struct Trusted {};
  DensityMatrix(const Matrix<N>& m, Trusted) : m_(m) {}
  Matrix<N> m_;
};

using Density2 = DensityMatrix<2>;
using Density4 = DensityMatrix<4>;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

struct Amplitude {
  Complex value;  // a_x + i a_y = 2 rho_10
  double phase;   // arg(value); 0 when value vanishes
};

BlochVector bloch_from_density(const Density2& rho);
Density2 density_from_bloch(const BlochVector& b, double tol = kDefaultTol);
Amplitude amplitude_of(const Density2& rho);

// Pure state |psi><psi| for a normalized 2-vector.
Density2 pure_state(const std::array<Complex, 2>& psi);

}  // namespace dephase
