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

#include "core/fit.hpp"

#include <cmath>
#include <limits>

#include "core/error.hpp"

namespace dephase {

double ExponentialFit::evaluate(double t) const { return std::exp(intercept + slope * t); }

ExponentialFit fit_exponential(std::span<const CurvePoint> points, double floor) {
  std::vector<double> ts;
  std::vector<double> ys;
  for (const auto& p : points) {
    require(std::isfinite(p.time) && std::isfinite(p.magnitude), Errc::invalid_argument,
            "curve points must be finite");
    if (p.magnitude > floor) {
      ts.push_back(p.time);
      ys.push_back(std::log(p.magnitude));
    }
  }
  require(ts.size() >= 3, Errc::invalid_argument, "exponential fit needs at least three points above the floor");

  const double n = static_cast<double>(ts.size());
  double t_mean = 0.0;
  double y_mean = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    t_mean += ts[k];
    y_mean += ys[k];
  }
  t_mean /= n;
  y_mean /= n;
  double stt = 0.0;
  double sty = 0.0;
  double syy = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    stt += (ts[k] - t_mean) * (ts[k] - t_mean);
    sty += (ts[k] - t_mean) * (ys[k] - y_mean);
    syy += (ys[k] - y_mean) * (ys[k] - y_mean);
  }
  require(stt > 0.0, Errc::invalid_argument, "exponential fit needs at least two distinct times");

  ExponentialFit fit{};
  fit.slope = sty / stt;
  fit.intercept = y_mean - fit.slope * t_mean;
  fit.points_used = ts.size();
  double ss_res = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double r = ys[k] - (fit.intercept + fit.slope * ts[k]);
    ss_res += r * r;
  }
  fit.rms_residual = std::sqrt(ss_res / n);
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  fit.decays = fit.slope < 0.0;
  fit.t2 = fit.decays ? -1.0 / fit.slope : std::numeric_limits<double>::infinity();
  return fit;
}

}  // namespace dephase
