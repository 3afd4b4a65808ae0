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

#include "core/channels.hpp"

#include <cmath>
#include <numbers>

namespace dephase {

KrausChannel::KrausChannel(std::vector<Mat2> operators, std::string label, double tol)
    : ops_(std::move(operators)), label_(std::move(label)) {
  require(!ops_.empty(), Errc::completeness, "a channel needs at least one Kraus operator");
  Mat2 sum;
  for (const auto& e : ops_) sum += e.adjoint() * e;
  require(approx_equal(sum, Mat2::identity(), tol), Errc::completeness,
          "Kraus operators are not complete (sum E^dagger E != I)");
}

Mat2 KrausChannel::map(const Mat2& m) const {
  Mat2 out;
  for (const auto& e : ops_) out += conjugate(e, m);
  return out;
}

Density2 KrausChannel::apply(const Density2& rho) const { return Density2::trusted(map(rho.matrix())); }

void validate(const MixingEnsemble& ens) {
  require(!ens.unitaries.empty(), Errc::invalid_argument, "mixing ensemble is empty");
  require(ens.unitaries.size() == ens.probabilities.size(), Errc::invalid_argument,
          "mixing ensemble needs one probability per unitary");
  double total = 0.0;
  for (double p : ens.probabilities) {
    require(std::isfinite(p) && p >= 0.0 && p <= 1.0, Errc::invalid_argument,
            "mixing probabilities must lie in [0, 1]");
    total += p;
  }
  require(std::abs(total - 1.0) <= 1e-12, Errc::invalid_argument, "mixing probabilities must sum to 1");
  for (const auto& u : ens.unitaries)
    require(is_unitary(u), Errc::not_unitary, "mixing ensemble member is not unitary");
}

KrausChannel identity_channel() { return KrausChannel({Mat2::identity()}, "identity"); }

KrausChannel phase_flip(double p) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, Errc::invalid_argument,
          "phase flip probability must lie in [0, 1]");
  return KrausChannel({pauli::identity() * Complex(std::sqrt(p)), pauli::z() * Complex(std::sqrt(1.0 - p))},
                      "phase_flip");
}

KrausChannel channel_from_environment(const Mat4& u, const Density2& rho_e) {
  require(is_unitary(u), Errc::not_unitary, "environment coupling is not unitary");
  const Eigensystem2 es = hermitian_eigensystem(rho_e.matrix());
  std::vector<Mat2> ops;
  ops.reserve(4);
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t j = 0; j < 2; ++j) {
      // Small negative eigenvalues from rounding are clamped to zero weight.
      const double weight = std::sqrt(std::max(es.values[j], 0.0));
      const auto& ej = es.vectors[j];
      Mat2 e;
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
          e(a, b) = weight * (u(2 * a + k, 2 * b) * ej[0] + u(2 * a + k, 2 * b + 1) * ej[1]);
      ops.push_back(e);
    }
  }
  return KrausChannel(std::move(ops), "environment");
}

KrausChannel channel_from_mixing(const MixingEnsemble& ens) {
  validate(ens);
  std::vector<Mat2> ops;
  ops.reserve(ens.unitaries.size());
  for (std::size_t k = 0; k < ens.unitaries.size(); ++k)
    ops.push_back(ens.unitaries[k] * Complex(std::sqrt(ens.probabilities[k])));
  return KrausChannel(std::move(ops), "mixing");
}

Mat2 dilation_map(const Mat4& u, const Mat2& rho_s, const Mat2& rho_e) {
  return partial_trace_env(conjugate(u, tensor(rho_s, rho_e)));
}

Complex phase_average_factor(const PhaseDistribution& dist) {
  struct Visitor {
    Complex operator()(const UniformPhase&) const { return 0.0; }
    Complex operator()(const GaussianPhase& g) const {
      require(std::isfinite(g.stddev) && g.stddev >= 0.0, Errc::invalid_argument,
              "Gaussian phase width must be finite and non-negative");
      return std::exp(-0.5 * g.stddev * g.stddev);
    }
    Complex operator()(const TwoPointPhase& t) const {
      require(std::isfinite(t.delta), Errc::invalid_argument, "two-point phase offset must be finite");
      require(std::isfinite(t.q) && t.q >= 0.0 && t.q <= 1.0, Errc::invalid_argument,
              "two-point probability must lie in [0, 1]");
      return t.q * std::polar(1.0, t.delta) + (1.0 - t.q) * std::polar(1.0, -t.delta);
    }
  };
  return std::visit(Visitor{}, dist);
}

bool channels_equal_as_maps(const KrausChannel& a, const KrausChannel& b, double tol) {
  for (std::size_t k = 0; k < 4; ++k) {
    const Mat2 basis = pauli::basis(k);
    if (!approx_equal(a.map(basis), b.map(basis), tol)) return false;
  }
  return true;
}

Mat4 flip_dilation_unitary() {
  return tensor(pauli::identity(), ket_bra(0, 0)) + tensor(pauli::z(), ket_bra(1, 1));
}

Mat4 cnot_unitary() {
  const Mat2 plus = (pauli::identity() + pauli::x()) * Complex(0.5);
  const Mat2 minus = (pauli::identity() - pauli::x()) * Complex(0.5);
  return tensor(pauli::identity(), plus) + tensor(pauli::z(), minus);
}

Density2 flip_environment_state(double p) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, Errc::invalid_argument, "p must lie in [0, 1]");
  return pure_state({std::sqrt(p), std::sqrt(1.0 - p)});
}

Density2 mixed_plus_minus_state(double p) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, Errc::invalid_argument, "p must lie in [0, 1]");
  const double off = 0.5 * (2.0 * p - 1.0);
  return Density2(Mat2{0.5, off, off, 0.5});
}

}  // namespace dephase
