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

#include "core/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace dephase {

namespace pauli {

Mat2 identity() { return Mat2::identity(); }
Mat2 x() { return Mat2{0.0, 1.0, 1.0, 0.0}; }
Mat2 y() { return Mat2{0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}; }
Mat2 z() { return Mat2{1.0, 0.0, 0.0, -1.0}; }

Mat2 basis(std::size_t k) {
  switch (k) {
    case 0: return identity();
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: fail(Errc::invalid_argument, "Pauli basis index must be 0..3");
  }
}

}  // namespace pauli

Mat2 spin_z() { return pauli::z() * Complex(0.5); }

Mat2 ket_bra(std::size_t row, std::size_t col) {
  require(row < 2 && col < 2, Errc::invalid_argument, "ket_bra index out of range");
  Mat2 m;
  m(row, col) = 1.0;
  return m;
}

Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Mat2 partial_trace_env(const Mat4& m) {
  Mat2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  return out;
}

std::array<double, 2> hermitian_eigenvalues(const Mat2& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double r = std::sqrt(half * half + std::norm(m(0, 1)));
  return {mean - r, mean + r};
}

std::array<double, 4> hermitian_eigenvalues(const Mat4& m) {
  Eigen::Matrix4cd e;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) e(r, c) = m(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(e, Eigen::EigenvaluesOnly);
  const auto& v = solver.eigenvalues();
  return {v(0), v(1), v(2), v(3)};
}

Eigensystem2 hermitian_eigensystem(const Mat2& m) {
  Eigensystem2 es{};
  es.values = hermitian_eigenvalues(m);
  const Complex b = m(0, 1);
  if (std::abs(b) < 1e-300) {
    // Already diagonal; order the basis vectors to match ascending values.
    const bool swap = m(0, 0).real() > m(1, 1).real();
    es.vectors[0] = swap ? std::array<Complex, 2>{0.0, 1.0} : std::array<Complex, 2>{1.0, 0.0};
    es.vectors[1] = swap ? std::array<Complex, 2>{1.0, 0.0} : std::array<Complex, 2>{0.0, 1.0};
    return es;
  }
  const double a = m(0, 0).real();
  for (std::size_t j = 0; j < 2; ++j) {
    // (a - lambda) v0 + b v1 = 0  =>  v = (b, lambda - a)
    std::array<Complex, 2> v{b, es.values[j] - a};
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    es.vectors[j] = {v[0] / n, v[1] / n};
  }
  return es;
}

BlochVector bloch_from_density(const Density2& rho) {
  const Mat2& m = rho.matrix();
  const Complex two_rho10 = 2.0 * m(1, 0);
  return {two_rho10.real(), two_rho10.imag(), (m(0, 0) - m(1, 1)).real()};
}

Density2 density_from_bloch(const BlochVector& b, double tol) {
  require(std::isfinite(b.x) && std::isfinite(b.y) && std::isfinite(b.z), Errc::invalid_state,
          "Bloch vector components must be finite");
  require(b.norm() <= 1.0 + tol, Errc::invalid_state, "Bloch vector lies outside the unit ball");
  Mat2 m = pauli::identity() + pauli::x() * Complex(b.x) + pauli::y() * Complex(b.y) +
           pauli::z() * Complex(b.z);
  m *= 0.5;
  return Density2::trusted(m);
}

Amplitude amplitude_of(const Density2& rho) {
  const Complex v = 2.0 * rho.matrix()(1, 0);
  return {v, std::abs(v) > 0.0 ? std::arg(v) : 0.0};
}

Density2 pure_state(const std::array<Complex, 2>& psi) {
  Mat2 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return Density2(m);
}

}  // namespace dephase
