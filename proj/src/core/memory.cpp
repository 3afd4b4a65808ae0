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
#include <sstream>

#include "core/experiments.hpp"
#include "core/trials.hpp"

namespace dephase {

namespace {

constexpr double kPi = std::numbers::pi;

// Number of flip cycles n with t = 2 n D; -1 if t is not such a multiple.
long cycles_at(double t, double mean_interval) {
  const double ratio = t / (2.0 * mean_interval);
  const double n = std::round(ratio);
  if (n < 1.0 || std::abs(ratio - n) > 1e-9 * std::max(1.0, n)) return -1;
  return static_cast<long>(n);
}

struct TrialPlan {
  std::vector<double> flips;     // qubit-2 flip times, ascending
  std::vector<double> readouts;  // one per observation time
};

template <class Rng>
TrialPlan plan_trial(const MemoryConfig& cfg, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  auto next_normal = [&] { return normal(rng); };
  TrialPlan plan;
  double t = 0.0;
  if (cfg.readout == Readout::flip_aligned) {
    const long n_max = cycles_at(cfg.observation_times.back(), cfg.mean_interval);
    plan.flips.reserve(static_cast<std::size_t>(2 * n_max));
    for (long k = 0; k < 2 * n_max; ++k) {
      t += draw_interval(cfg.mean_interval, cfg.alpha, next_normal, cfg.max_rejections);
      plan.flips.push_back(t);
    }
    for (double obs : cfg.observation_times)
      plan.readouts.push_back(plan.flips[static_cast<std::size_t>(2 * cycles_at(obs, cfg.mean_interval) - 1)]);
  } else {
    const double end = cfg.observation_times.back();
    while (true) {
      t += draw_interval(cfg.mean_interval, cfg.alpha, next_normal, cfg.max_rejections);
      if (t > end) break;
      plan.flips.push_back(t);
    }
    plan.readouts = cfg.observation_times;
  }
  return plan;
}

PulseSchedule build_schedule(const MemoryConfig& cfg, const TrialPlan& plan) {
  const double end = plan.readouts.back();
  std::vector<PulseEvent> events;
  const auto env_axes = cyclic_axes(plan.flips.size());
  for (std::size_t k = 0; k < plan.flips.size(); ++k)
    events.push_back({plan.flips[k], Qubit::environment, env_axes[k], kPi});
  if (cfg.bang_bang) {
    const auto count = static_cast<std::size_t>(std::floor(end / cfg.t_b));
    const auto axes = cyclic_axes(count);
    for (std::size_t k = 0; k < count; ++k) {
      const double tk = static_cast<double>(k + 1) * cfg.t_b;
      if (tk > end) break;
      events.push_back({tk, Qubit::system, axes[k], kPi});
    }
  }
  return PulseSchedule(CouplingSystem(cfg.j), std::move(events), end);
}

}  // namespace

void validate(const MemoryConfig& cfg) {
  require(std::isfinite(cfg.j) && cfg.j > 0.0, Errc::invalid_argument, "J must be positive");
  require(std::isfinite(cfg.mean_interval) && cfg.mean_interval > 0.0, Errc::invalid_argument,
          "mean flip interval must be positive");
  require(std::isfinite(cfg.alpha) && cfg.alpha >= 0.0 && cfg.alpha <= 0.25, Errc::invalid_argument,
          "alpha must lie in [0, 0.25]");
  require(!cfg.observation_times.empty(), Errc::invalid_argument, "at least one observation time is required");
  double prev = 0.0;
  for (double t : cfg.observation_times) {
    require(std::isfinite(t) && t > prev, Errc::invalid_argument,
            "observation times must be positive and strictly ascending");
    if (cfg.readout == Readout::flip_aligned)
      require(cycles_at(t, cfg.mean_interval) > 0, Errc::invalid_argument,
              "observation times must be even multiples of the mean interval");
    prev = t;
  }
  require(cfg.trials >= 1, Errc::invalid_argument, "trial count must be at least 1");
  require(cfg.max_rejections >= 0, Errc::invalid_argument, "rejection limit must be non-negative");
  if (cfg.bang_bang) {
    require(std::isfinite(cfg.t_b) && cfg.t_b > 0.0, Errc::invalid_argument, "t_b must be positive");
    require(cfg.j * cfg.t_b < 2.0 * kPi, Errc::invalid_argument, "bang-bang requires J t_b < 2 pi");
  }
}

MemoryResult run_memory(const MemoryConfig& cfg) {
  validate(cfg);
  MemoryResult result;
  if (cfg.bang_bang && !(cfg.t_b < cfg.alpha * cfg.mean_interval)) {
    std::ostringstream msg;
    msg << "t_b = " << cfg.t_b << " s is not small against alpha * mean interval = "
        << cfg.alpha * cfg.mean_interval << " s; the bang-bang decay law assumes t_b << alpha D";
    result.warnings.push_back(msg.str());
  }

  const std::size_t n_obs = cfg.observation_times.size();
  std::vector<Complex> amplitudes(cfg.trials * n_obs);
  const Mat4 rho0 = initial_joint_state();

  detail::parallel_for(cfg.trials, cfg.threads, [&](std::size_t trial) {
    auto rng = detail::trial_engine(cfg.seed, trial);
    const TrialPlan plan = plan_trial(cfg, rng);
    const PulseSchedule sched = build_schedule(cfg, plan);
    const auto states = simulate_snapshots(sched, rho0, plan.readouts);

    Mat2 control = Mat2::identity();
    std::size_t next = 0;
    const auto& events = sched.events();
    for (std::size_t k = 0; k < n_obs; ++k) {
      while (next < events.size() && events[next].time <= plan.readouts[k]) {
        if (events[next].target == Qubit::system)
          control = rotation_pulse(events[next].axis, events[next].angle) * control;
        ++next;
      }
      amplitudes[trial * n_obs + k] = toggling_frame_amplitude(states[k], control);
    }
  });

  result.mean_amplitudes.assign(n_obs, Complex{});
  for (std::size_t trial = 0; trial < cfg.trials; ++trial)
    for (std::size_t k = 0; k < n_obs; ++k) result.mean_amplitudes[k] += amplitudes[trial * n_obs + k];
  for (auto& m : result.mean_amplitudes) m /= static_cast<double>(cfg.trials);

  for (std::size_t k = 0; k < n_obs; ++k)
    result.curve.points.push_back({cfg.observation_times[k], std::abs(result.mean_amplitudes[k])});

  std::size_t above_floor = 0;
  for (const auto& p : result.curve.points)
    if (p.magnitude > kFitFloor) ++above_floor;
  if (above_floor >= 3) result.curve.fit = fit_exponential(result.curve.points);
  return result;
}

}  // namespace dephase
