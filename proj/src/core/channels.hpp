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

// Single-qubit quantum channels in operator-sum (Kraus) form.

#include <string>
#include <variant>
#include <vector>

#include "core/linalg.hpp"

namespace dephase {

class KrausChannel {
 public:
  // Throws Errc::completeness unless sum_k E_k^dagger E_k = I within tol.
  KrausChannel(std::vector<Mat2> operators, std::string label, double tol = kDefaultTol);

  const std::vector<Mat2>& operators() const { return ops_; }
  const std::string& label() const { return label_; }

  // The linear map sum_k E_k m E_k^dagger on an arbitrary operator.
  Mat2 map(const Mat2& m) const;

  Density2 apply(const Density2& rho) const;

 private:
  std::vector<Mat2> ops_;
  std::string label_;
};

struct MixingEnsemble {
  std::vector<Mat2> unitaries;
  std::vector<double> probabilities;
};

// Throws Errc::invalid_argument / Errc::not_unitary on a malformed ensemble.
void validate(const MixingEnsemble& ens);

KrausChannel identity_channel();

// {sqrt(p) I, sqrt(1-p) sigma_z}: phase kept with probability p, flipped otherwise.
KrausChannel phase_flip(double p);

// Operator-sum form of rho_s -> Tr_env(U (rho_s (x) rho_e) U^dagger). The
// environment state is diagonalized, rho_e = sum_j l_j |e_j><e_j|, giving
// E_{k,j} = sqrt(l_j) <k|U|e_j>. Zero-weight terms are kept.
KrausChannel channel_from_environment(const Mat4& u, const Density2& rho_e);

// E_k = sqrt(p_k) U_k.
KrausChannel channel_from_mixing(const MixingEnsemble& ens);

// Direct evaluation of Tr_env(U (rho_s (x) rho_e) U^dagger), without Kraus form.
Mat2 dilation_map(const Mat4& u, const Mat2& rho_s, const Mat2& rho_e);

struct UniformPhase {};  // theta uniform on [0, 2 pi)
struct GaussianPhase {
  double stddev;
};
struct TwoPointPhase {
  double delta;  // theta = +delta with probability q, -delta otherwise
  double q;
};
using PhaseDistribution = std::variant<UniformPhase, GaussianPhase, TwoPointPhase>;

// <e^{i theta}> over the distribution.
Complex phase_average_factor(const PhaseDistribution& dist);

// Superoperator equality: the two maps agree on I, sigma_x, sigma_y, sigma_z.
bool channels_equal_as_maps(const KrausChannel& a, const KrausChannel& b, double tol = kDefaultTol);

// Two dilations of the phase-flip channel.
Mat4 flip_dilation_unitary();  // I (x) |0><0| + sigma_z (x) |1><1|
Mat4 cnot_unitary();           // I (x) |+><+| + sigma_z (x) |-><-|
Density2 flip_environment_state(double p);       // sqrt(p)|0> + sqrt(1-p)|1>
Density2 mixed_plus_minus_state(double p);       // p|+><+| + (1-p)|-><-|

}  // namespace dephase
