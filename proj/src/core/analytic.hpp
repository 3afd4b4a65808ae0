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

// Closed-form decay laws for the engineered-dephasing experiments.

namespace dephase {

// sin(x)/x with the removable singularity filled in.
double sinc(double x);

// Per-cycle coherence factor under bang-bang control with a uniformly random
// pulse-train phase: (sin(J t_b / 2) / (J t_b / 2))^2.
double kappa(double j, double t_b);

// Same, when the train starts exactly at the first environment flip:
// sin(J t_b / 2) / (J t_b / 2).
double kappa_fixed_start(double j, double t_b);

// Per-cycle coherence factor for Gaussian flip intervals: exp(-(J D alpha)^2 / 4).
double lambda_factor(double j, double mean_interval, double alpha);

// 8 / (J^2 alpha^2 D).
double t2_star(double j, double alpha, double mean_interval);

// -2 D / ln(kappa); +infinity when J t_b < 1e-8.
double t2b_star(double j, double t_b, double mean_interval);

// -(1/alpha^2) ln(decay_alpha / decay_ref).
double r_statistic(double decay_alpha, double decay_ref, double alpha);

// Net phase theta (qubit 1 ends in S(theta), i.e. rho_01 -> e^{i theta} rho_01)
// for the four parity cases of a bang-bang train around one environment
// window. eps0 / eps1: offsets of the first / last pulse from the window
// edges, both in [0, t_b].
//   1: J (eps1 + eps0 - t_b)   2: J (eps0 - eps1)
//   3: J (t_b - eps1 - eps0)   4: J (eps1 - eps0)
double four_case_phase(int parity_case, double eps0, double eps1, double t_b, double j);

}  // namespace dephase
