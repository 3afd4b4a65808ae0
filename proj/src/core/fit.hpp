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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dephase {

struct CurvePoint {
  double time;       // s
  double magnitude;  // |mean amplitude|
};

// Least-squares line through (t, ln m): ln m = slope * t + intercept.
struct ExponentialFit {
  double t2;            // -1/slope; +infinity when the curve does not decay
  double slope;         // 1/s
  double intercept;
  double rms_residual;  // in ln m
  double r_squared;
  std::size_t points_used;
  bool decays;          // false flags a non-negative slope

  double evaluate(double t) const;
};

inline constexpr double kFitFloor = 0.02;

// Uses only points with magnitude > floor; throws Errc::invalid_argument when
// fewer than three remain.
ExponentialFit fit_exponential(std::span<const CurvePoint> points, double floor = kFitFloor);

struct DecayCurve {
  std::vector<CurvePoint> points;
  std::optional<ExponentialFit> fit;
};

}  // namespace dephase
