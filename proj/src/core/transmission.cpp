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

#include <cmath>
#include <numbers>

#include "core/experiments.hpp"
#include "core/trials.hpp"

namespace dephase {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t pulse_count(const TransmissionConfig& cfg) {
  return cfg.pulses_per_trial != 0 ? cfg.pulses_per_trial : default_pulse_count(cfg.j, cfg.t_b);
}

// Integral over [0, T] of the toggling sign of qubit 1, which starts at +1
// and flips at every qubit-1 pulse.
double toggling_integral(const PulseSchedule& sched) {
  double sign = 1.0;
  double last = 0.0;
  double acc = 0.0;
  for (const auto& e : sched.events()) {
    if (e.target != Qubit::system) continue;
    acc += sign * (e.time - last);
    last = e.time;
    sign = -sign;
  }
  return acc + sign * (sched.total_time() - last);
}

}  // namespace

Mat2 control_rotation(const PulseSchedule& sched, double until) {
  Mat2 c = Mat2::identity();
  for (const auto& e : sched.events()) {
    if (e.time > until) break;
    if (e.target == Qubit::system) c = rotation_pulse(e.axis, e.angle) * c;
  }
  return c;
}

Mat4 initial_joint_state() {
  const Mat2 plus_x = (Mat2::identity() + pauli::x()) * Complex(0.5);
  return tensor(plus_x, ket_bra(0, 0));
}

Complex toggling_frame_amplitude(const Mat4& joint, const Mat2& control) {
  const Mat2 rho1 = control.adjoint() * partial_trace_env(joint) * control;
  return 2.0 * rho1(1, 0);
}

std::size_t default_pulse_count(double j, double t_b) {
  require(std::isfinite(j) && j > 0.0, Errc::invalid_argument, "J must be positive");
  require(std::isfinite(t_b) && t_b > 0.0, Errc::invalid_argument, "t_b must be positive");
  const double window = 2.0 * kPi / j;
  const auto raw = static_cast<std::size_t>(std::ceil((window + t_b) / t_b));
  return (raw + 7) / 8 * 8;
}

void validate(const TransmissionConfig& cfg) {
  require(std::isfinite(cfg.j) && cfg.j > 0.0, Errc::invalid_argument, "J must be positive");
  require(std::isfinite(cfg.total_time) && cfg.total_time > 0.0, Errc::invalid_argument,
          "total time T must be positive");
  require(std::isfinite(cfg.t1) && cfg.t1 > 0.0 && cfg.t1 < cfg.total_time, Errc::invalid_argument,
          "t1 must satisfy 0 < t1 < T");
  require(cfg.t1 + 2.0 * kPi / cfg.j <= cfg.total_time, Errc::invalid_argument,
          "noise window [t1, t1 + 2 pi / J] must end before T");
  require(cfg.trials >= 1, Errc::invalid_argument, "trial count must be at least 1");
  require(cfg.group_size >= 1, Errc::invalid_argument, "group size must be at least 1");
  if (!cfg.bang_bang) return;
  require(std::isfinite(cfg.t_b) && cfg.t_b > 0.0, Errc::invalid_argument, "t_b must be positive");
  require(cfg.j * cfg.t_b < 1.0, Errc::invalid_argument, "bang-bang requires J t_b < 1");
  const std::size_t count = pulse_count(cfg);
  require(count >= 1, Errc::invalid_argument, "bang-bang train needs at least one pulse");
  if (cfg.train_start == TrainStart::random_phase)
    require(cfg.t1 >= cfg.t_b, Errc::invalid_argument, "random train phase requires t1 >= t_b");
  require(cfg.t1 + static_cast<double>(count - 1) * cfg.t_b <= cfg.total_time, Errc::invalid_argument,
          "bang-bang train must end before T");
}

PulseSchedule transmission_schedule(const TransmissionConfig& cfg, double delta, double train_offset) {
  std::vector<PulseEvent> events;
  events.push_back({cfg.t1, Qubit::environment, Axis::x, kPi});
  events.push_back({cfg.t1 + delta, Qubit::environment, Axis::x, kPi});
  if (cfg.bang_bang) {
    const std::size_t count = pulse_count(cfg);
    const auto axes = cyclic_axes(count);
    const double start = cfg.t1 - train_offset;
    for (std::size_t k = 0; k < count; ++k)
      events.push_back({start + static_cast<double>(k) * cfg.t_b, Qubit::system, axes[k], kPi});
  }
  return PulseSchedule(CouplingSystem(cfg.j), std::move(events), cfg.total_time);
}

Complex transmission_amplitude(const TransmissionConfig& cfg, double delta, double train_offset) {
  const PulseSchedule sched = transmission_schedule(cfg, delta, train_offset);
  const double readout = cfg.total_time;
  const Mat4 joint = simulate_snapshots(sched, initial_joint_state(), std::span<const double>(&readout, 1)).front();
  Complex amp = toggling_frame_amplitude(joint, control_rotation(sched, readout));
  if (cfg.remove_trivial_phase) amp *= std::polar(1.0, -0.5 * cfg.j * toggling_integral(sched));
  return amp;
}

EnsembleResult run_transmission(const TransmissionConfig& cfg) {
  validate(cfg);
  const double window = 2.0 * kPi / cfg.j;

  EnsembleResult result;
  result.observation_time = cfg.total_time;
  result.trials.resize(cfg.trials);

  detail::parallel_for(cfg.trials, cfg.threads, [&](std::size_t trial) {
    auto rng = detail::trial_engine(cfg.seed, trial);
    std::uniform_real_distribution<double> window_dist(0.0, window);
    const double delta = window_dist(rng);
    double offset = 0.0;
    if (cfg.bang_bang && cfg.train_start == TrainStart::random_phase)
      offset = std::uniform_real_distribution<double>(0.0, cfg.t_b)(rng);

    result.trials[trial] = transmission_amplitude(cfg, delta, offset);
  });

  Complex total{};
  for (std::size_t k = 0; k < cfg.trials; ++k) {
    total += result.trials[k];
    if ((k + 1) % cfg.group_size == 0 || k + 1 == cfg.trials) {
      const std::size_t begin = k / cfg.group_size * cfg.group_size;
      Complex group{};
      for (std::size_t i = begin; i <= k; ++i) group += result.trials[i];
      result.groups.push_back(group / static_cast<double>(k + 1 - begin));
    }
  }
  result.grand = total / static_cast<double>(cfg.trials);
  return result;
}

}  // namespace dephase
