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

#include <string>
#include <vector>

#include "core/experiments.hpp"
#include "core/fit.hpp"

namespace dephase {

// Header "time_s,magnitude,fit_magnitude", one row per point, 12 significant
// digits; fit_magnitude is "nan" when the curve has no fit. Throws
// Errc::invalid_argument for an empty curve (nothing is written) and
// Errc::io when the file cannot be written.
void write_curve_csv(const DecayCurve& curve, const std::string& path);

struct CurveRow {
  double time;
  double magnitude;
  double fit_magnitude;
};
std::vector<CurveRow> read_curve_csv(const std::string& path);

// trial,re,im,magnitude,phase
void write_trials_csv(const EnsembleResult& result, const std::string& path);
// group,re,im,magnitude
void write_groups_csv(const EnsembleResult& result, const std::string& path);

// Formats with 12 significant digits.
std::string format_number(double v);

}  // namespace dephase
