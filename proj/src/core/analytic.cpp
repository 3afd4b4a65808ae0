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

#include "core/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "core/error.hpp"

namespace dephase {

namespace {

void require_positive(double v, const char* what) {
  require(std::isfinite(v) && v > 0.0, Errc::invalid_argument, what);
}

}  // namespace

double sinc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0 + x * x * x * x / 120.0;
  return std::sin(x) / x;
}

double kappa_fixed_start(double j, double t_b) {
  require_positive(j, "J must be positive");
  require_positive(t_b, "bang-bang interval t_b must be positive");
  return sinc(0.5 * j * t_b);
}

double kappa(double j, double t_b) {
  const double k = kappa_fixed_start(j, t_b);
  return k * k;
}

double lambda_factor(double j, double mean_interval, double alpha) {
  require_positive(j, "J must be positive");
  require_positive(mean_interval, "mean interval must be positive");
  require(std::isfinite(alpha) && alpha >= 0.0, Errc::invalid_argument, "alpha must be non-negative");
  const double x = j * mean_interval * alpha;
  return std::exp(-0.25 * x * x);
}

double t2_star(double j, double alpha, double mean_interval) {
  require_positive(j, "J must be positive");
  require_positive(alpha, "alpha must be positive for a finite T2*");
  require_positive(mean_interval, "mean interval must be positive");
  return 8.0 / (j * j * alpha * alpha * mean_interval);
}

double t2b_star(double j, double t_b, double mean_interval) {
  require_positive(j, "J must be positive");
  require_positive(t_b, "bang-bang interval t_b must be positive");
  require_positive(mean_interval, "mean interval must be positive");
  const double x = j * t_b;
  require(x < 2.0 * std::numbers::pi, Errc::invalid_argument, "J t_b must be below 2 pi");
  if (x < 1e-8) return std::numeric_limits<double>::infinity();
  return -2.0 * mean_interval / std::log(kappa(j, t_b));
}

double r_statistic(double decay_alpha, double decay_ref, double alpha) {
  require(std::isfinite(decay_alpha) && decay_alpha > 0.0 && decay_alpha <= 1.0, Errc::invalid_argument,
          "decay factor must lie in (0, 1]");
  require(std::isfinite(decay_ref) && decay_ref > 0.0 && decay_ref <= 1.0, Errc::invalid_argument,
          "reference decay factor must lie in (0, 1]");
  require_positive(alpha, "alpha must be positive");
  return -std::log(decay_alpha / decay_ref) / (alpha * alpha);
}

double four_case_phase(int parity_case, double eps0, double eps1, double t_b, double j) {
  require_positive(t_b, "bang-bang interval t_b must be positive");
  require(std::isfinite(j), Errc::invalid_argument, "J must be finite");
  require(eps0 >= 0.0 && eps0 <= t_b && eps1 >= 0.0 && eps1 <= t_b, Errc::invalid_argument,
          "pulse offsets must lie in [0, t_b]");
  switch (parity_case) {
    case 1: return j * (eps1 + eps0 - t_b);
    case 2: return j * (eps0 - eps1);
    case 3: return j * (t_b - eps1 - eps0);
    case 4: return j * (eps1 - eps0);
    default: fail(Errc::invalid_argument, "parity case must be 1..4");
  }
}

}  // namespace dephase
