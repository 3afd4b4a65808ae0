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

// Reference computations written independently of the library kernels:
// index-loop Kronecker products and partial traces, a Taylor-series matrix
// exponential, quadrature, and explicit schedule builders.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "core/linalg.hpp"
#include "core/pulse.hpp"

namespace oracle {

using dephase::Complex;
using dephase::Mat2;
using dephase::Mat4;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kReferenceJ = 2.0 * kPi * 215.5;  // rad/s

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

// Tr_2 with qubit 1 as the left factor.
inline Mat2 trace_out_second(const Mat4& m) {
  Mat2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  return out;
}

template <std::size_t N>
dephase::Matrix<N> expm(const dephase::Matrix<N>& a) {
  // Scaling and squaring around a 30-term Taylor series.
  int squarings = 0;
  double norm = a.frobenius_norm();
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const dephase::Matrix<N> scaled = a * Complex(std::ldexp(1.0, -squarings));
  dephase::Matrix<N> term = dephase::Matrix<N>::identity();
  dephase::Matrix<N> sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled * Complex(1.0 / k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

inline double simpson(const std::function<double(double)>& f, double a, double b, int intervals = 20000) {
  if (intervals % 2) ++intervals;
  const double h = (b - a) / intervals;
  double s = f(a) + f(b);
  for (int k = 1; k < intervals; ++k) s += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

inline Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

// A A^dagger / Tr: full-rank generic states.
template <std::size_t N>
dephase::Matrix<N> random_density(std::mt19937_64& rng) {
  dephase::Matrix<N> a;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) a(r, c) = random_complex(rng);
  dephase::Matrix<N> rho = a * a.adjoint();
  return rho * Complex(1.0 / rho.trace().real());
}

// Pure state on a random direction (boundary of the Bloch ball).
inline Mat2 random_pure2(std::mt19937_64& rng) {
  const Complex a = random_complex(rng), b = random_complex(rng);
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  const Complex u = a / n, v = b / n;
  return Mat2{u * std::conj(u), u * std::conj(v), v * std::conj(u), v * std::conj(v)};
}

// Gram-Schmidt on Gaussian columns.
template <std::size_t N>
dephase::Matrix<N> random_unitary(std::mt19937_64& rng) {
  std::array<std::array<Complex, N>, N> cols{};
  for (std::size_t c = 0; c < N; ++c) {
    for (std::size_t r = 0; r < N; ++r) cols[c][r] = random_complex(rng);
    for (std::size_t p = 0; p < c; ++p) {
      Complex dot = 0.0;
      for (std::size_t r = 0; r < N; ++r) dot += std::conj(cols[p][r]) * cols[c][r];
      for (std::size_t r = 0; r < N; ++r) cols[c][r] -= dot * cols[p][r];
    }
    double n = 0.0;
    for (std::size_t r = 0; r < N; ++r) n += std::norm(cols[c][r]);
    n = std::sqrt(n);
    for (std::size_t r = 0; r < N; ++r) cols[c][r] /= n;
  }
  dephase::Matrix<N> u;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) u(r, c) = cols[c][r];
  return u;
}

// Sum over k of E_k rho E_k^dagger with E_k = sqrt(w) <k|U|e>, written out
// from the unitary-environment picture: Tr_2 U (rho_s x rho_e) U^dagger.
inline Mat2 dilate(const Mat4& u, const Mat2& rho_s, const Mat2& rho_e) {
  return trace_out_second(u * kron(rho_s, rho_e) * u.adjoint());
}

// Joint schedule around one environment window for the four parity cases.
// Pulses sit on the grid k t_b; qubit 2 is flipped at t1 and t1 + delta
// where t1 + eps0 is the first pulse inside the window and the last one sits
// eps1 before its end. Cases 1/3 have an even count inside (2n), 2/4 odd
// (2n+1); cases 3/4 have one pulse before the window, 1/4 two after it,
// 2/3 one after it. Pulses alternate V, V^dagger.
struct FourCaseSchedule {
  dephase::PulseSchedule schedule;
  double t1;
  double delta;
};

inline FourCaseSchedule four_case_schedule(int parity_case, double eps0, double eps1, double t_b, int n, double j) {
  using dephase::Axis;
  using dephase::PulseEvent;
  using dephase::Qubit;
  const int before = (parity_case == 3 || parity_case == 4) ? 1 : 0;
  const int inside = (parity_case == 1 || parity_case == 3) ? 2 * n : 2 * n + 1;
  const int after = (parity_case == 1 || parity_case == 4) ? 2 : 1;

  const double first_inside = (before + 1) * t_b;
  const double t1 = first_inside - eps0;
  const double delta = eps0 + (inside - 1) * t_b + eps1;

  std::vector<double> pulse_times;
  for (int k = 0; k < before; ++k) pulse_times.push_back((k + 1) * t_b);
  for (int k = 0; k < inside; ++k) pulse_times.push_back(first_inside + k * t_b);
  const double last_inside = pulse_times.back();
  for (int k = 0; k < after; ++k) pulse_times.push_back(last_inside + (k + 1) * t_b);

  std::vector<PulseEvent> events;
  for (std::size_t k = 0; k < pulse_times.size(); ++k)
    events.push_back({pulse_times[k], Qubit::system, k % 2 == 0 ? Axis::x : Axis::minus_x, kPi});
  events.push_back({t1, Qubit::environment, Axis::x, kPi});
  events.push_back({t1 + delta, Qubit::environment, Axis::x, kPi});
  const double total = std::max(pulse_times.back(), t1 + delta);
  return {dephase::PulseSchedule(dephase::CouplingSystem(j), events, total), t1, delta};
}

// Wrap into (-pi, pi].
inline double wrap(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

// Toggling-frame amplitude of one transmission trial with the trivial phase
// removed: exp(-i J int_window s(t) dt), s flipping sign at every qubit-1
// pi pulse.
inline Complex window_amplitude(double j, double t1, double delta, const std::vector<double>& pulse_times) {
  double integral = 0.0;
  double lo = t1;
  const double hi = t1 + delta;
  int sign = 1;
  for (double p : pulse_times)
    if (p <= t1) sign = -sign;
  for (double p : pulse_times) {
    if (p <= t1) continue;
    if (p >= hi) break;
    integral += sign * (p - lo);
    lo = p;
    sign = -sign;
  }
  integral += sign * (hi - lo);
  return std::polar(1.0, -j * integral);
}

}  // namespace oracle
