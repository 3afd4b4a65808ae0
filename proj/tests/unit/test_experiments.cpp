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

#include <doctest.h>

#include <random>

#include "core/analytic.hpp"
#include "core/experiments.hpp"
#include "core/trials.hpp"
#include "support/oracles.hpp"

using namespace dephase;
using oracle::Complex;
using oracle::kPi;

namespace {

const double kJ = oracle::kReferenceJ;
const double kMean = 2e-3;

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::io;
}

TransmissionConfig transmission(bool bang_bang, std::size_t trials, std::uint64_t seed) {
  TransmissionConfig c;
  c.j = kJ;
  c.total_time = 12e-3;
  c.t1 = 2e-3;
  c.bang_bang = bang_bang;
  c.t_b = 0.3e-3;
  c.trials = trials;
  c.seed = seed;
  return c;
}

MemoryConfig memory(double alpha, std::size_t trials, std::uint64_t seed) {
  MemoryConfig c;
  c.j = kJ;
  c.mean_interval = kMean;
  c.alpha = alpha;
  for (int k = 1; k <= 25; ++k) c.observation_times.push_back(k * 2 * kMean);
  c.trials = trials;
  c.seed = seed;
  return c;
}

double standard_error(const std::vector<Complex>& xs, Complex mean) {
  double s = 0.0;
  for (const auto& x : xs) s += std::norm(x - mean);
  const double n = static_cast<double>(xs.size());
  return std::sqrt(s / (n * (n - 1.0)));
}

}  // namespace

TEST_CASE("default bang-bang pulse count") {
  CHECK(default_pulse_count(kJ, 0.3e-3) == 24);
  for (double t_b : {0.1e-3, 0.2e-3, 0.3e-3, 0.45e-3, 0.7e-3}) {
    const std::size_t n = default_pulse_count(kJ, t_b);
    CHECK(n % 8 == 0);
    CHECK(static_cast<double>(n) * t_b >= 2 * kPi / kJ + t_b);
    CHECK(static_cast<double>(n - 8) * t_b < 2 * kPi / kJ + t_b);
  }
}

TEST_CASE("transmission config validation") {
  CHECK_NOTHROW(validate(transmission(true, 10, 1)));
  auto c = transmission(false, 10, 1);
  c.t1 = 0.0;
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  c = transmission(false, 10, 1);
  c.total_time = 5e-3;  // window of 1/215.5 s does not fit after t1 = 2 ms
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  c = transmission(true, 10, 1);
  c.t_b = 1.0 / kJ;  // J t_b must stay below 1
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  c = transmission(false, 0, 1);
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  c = transmission(false, 10, 1);
  c.group_size = 0;
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  c = transmission(true, 10, 1);
  c.train_start = TrainStart::random_phase;
  c.t1 = 0.2e-3;
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  c = transmission(true, 10, 1);
  c.pulses_per_trial = 40;  // train runs past T
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  CHECK(code_of([] { run_transmission(TransmissionConfig{}); }) == Errc::invalid_argument);
}

TEST_CASE("single transmission trials") {
  SUBCASE("an empty window leaves the amplitude at one") {
    for (bool bb : {false, true}) CHECK(std::abs(transmission_amplitude(transmission(bb, 1, 1), 0.0, 0.0) - 1.0) < 1e-12);
  }
  SUBCASE("without bang-bang the window imprints exp(-i J delta)") {
    const auto c = transmission(false, 1, 1);
    for (double delta : {0.0, 0.7e-3, 2.1e-3, 4.5e-3})
      CHECK(std::abs(transmission_amplitude(c, delta, 0.0) - std::polar(1.0, -kJ * delta)) < 1e-12);
  }
  SUBCASE("bang-bang trials match the toggling-frame integral") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (TrainStart mode : {TrainStart::at_window, TrainStart::random_phase}) {
      auto c = transmission(true, 1, 1);
      c.train_start = mode;
      const std::size_t n = default_pulse_count(c.j, c.t_b);
      for (int k = 0; k < 200; ++k) {
        const double delta = unit(rng) * 2 * kPi / kJ;
        const double offset = mode == TrainStart::at_window ? 0.0 : unit(rng) * c.t_b;
        std::vector<double> pulses;
        for (std::size_t p = 0; p < n; ++p) pulses.push_back(c.t1 - offset + static_cast<double>(p) * c.t_b);
        const Complex expected = oracle::window_amplitude(kJ, c.t1, delta, pulses);
        CHECK(std::abs(transmission_amplitude(c, delta, offset) - expected) < 1e-10);
      }
    }
  }
  SUBCASE("the schedule carries the flips and the cyclic train") {
    auto c = transmission(true, 1, 1);
    const auto s = transmission_schedule(c, 1e-3, 0.0);
    std::size_t flips = 0, pulses = 0;
    std::vector<Axis> axes;
    for (const auto& e : s.events()) {
      if (e.target == Qubit::environment) {
        ++flips;
      } else {
        ++pulses;
        axes.push_back(e.axis);
        CHECK(e.angle == doctest::Approx(kPi));
      }
    }
    CHECK(flips == 2);
    CHECK(pulses == 24);
    CHECK(axes == cyclic_axes(24));
  }
}

TEST_CASE("transmission ensemble structure") {
  auto c = transmission(false, 1000, 7);
  c.group_size = 16;
  const auto r = run_transmission(c);
  REQUIRE(r.trials.size() == 1000);
  REQUIRE(r.groups.size() == 63);  // 62 full groups and a partial one of 8
  Complex sum = 0.0;
  double max_mag = 0.0;
  for (const auto& a : r.trials) {
    sum += a;
    max_mag = std::max(max_mag, std::abs(a));
    CHECK(std::abs(a) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(std::abs(r.grand - sum / 1000.0) < 1e-14);
  CHECK(std::abs(r.grand) <= max_mag);
  Complex first = 0.0, last = 0.0;
  for (int k = 0; k < 16; ++k) first += r.trials[k];
  for (int k = 992; k < 1000; ++k) last += r.trials[k];
  CHECK(std::abs(r.groups.front() - first / 16.0) < 1e-14);
  CHECK(std::abs(r.groups.back() - last / 8.0) < 1e-14);
  CHECK(r.observation_time == c.total_time);
}

TEST_CASE("determinism under a fixed seed") {
  auto a = transmission(true, 600, 99);
  a.train_start = TrainStart::random_phase;
  auto b = a;
  a.threads = 1;
  b.threads = 4;
  const auto ra = run_transmission(a), rb = run_transmission(b);
  REQUIRE(ra.trials.size() == rb.trials.size());
  for (std::size_t k = 0; k < ra.trials.size(); ++k) CHECK(ra.trials[k] == rb.trials[k]);
  CHECK(ra.grand == rb.grand);
  auto other = a;
  other.seed = 100;
  CHECK(run_transmission(other).grand != ra.grand);

  auto m1 = memory(0.2, 300, 5);
  auto m2 = m1;
  m1.threads = 1;
  m2.threads = 3;
  const auto r1 = run_memory(m1), r2 = run_memory(m2);
  for (std::size_t k = 0; k < r1.mean_amplitudes.size(); ++k) CHECK(r1.mean_amplitudes[k] == r2.mean_amplitudes[k]);

  // Streams depend only on (seed, trial).
  auto e1 = detail::trial_engine(3, 17), e2 = detail::trial_engine(3, 17), e3 = detail::trial_engine(3, 18);
  const auto x1 = e1(), x2 = e2(), x3 = e3();
  CHECK(x1 == x2);
  CHECK(x1 != x3);
}

TEST_CASE("Monte Carlo error of complete dephasing shrinks as 1/sqrt(N)") {
  // E|mean|^2 = 1/N for unit-modulus amplitudes with zero mean.
  const auto rms_over_seeds = [](std::size_t n) {
    double s = 0.0;
    const int seeds = 60;
    for (int k = 0; k < seeds; ++k) s += std::norm(run_transmission(transmission(false, n, 1000 + k)).grand);
    return std::sqrt(s / seeds);
  };
  const double small = rms_over_seeds(500), large = rms_over_seeds(1000);
  CHECK(small == doctest::Approx(1.0 / std::sqrt(500.0)).epsilon(0.3));
  CHECK(large == doctest::Approx(1.0 / std::sqrt(1000.0)).epsilon(0.3));
  CHECK(small / large == doctest::Approx(std::sqrt(2.0)).epsilon(0.3));
}

TEST_CASE("bang-bang transmission brackets the retention factor") {
  for (TrainStart mode : {TrainStart::at_window, TrainStart::random_phase}) {
    auto c = transmission(true, 4000, 777);
    c.train_start = mode;
    const auto r = run_transmission(c);
    const double theory = mode == TrainStart::at_window ? kappa_fixed_start(kJ, c.t_b) : kappa(kJ, c.t_b);
    const double se = standard_error(r.trials, r.grand);
    CAPTURE(static_cast<int>(mode));
    CHECK(std::abs(std::abs(r.grand) - theory) < 3.0 * se);
  }
}

TEST_CASE("memory config validation") {
  CHECK_NOTHROW(validate(memory(0.25, 10, 1)));
  auto c = memory(0.26, 10, 1);
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  c = memory(-0.01, 10, 1);
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  c = memory(0.1, 10, 1);
  c.observation_times = {4e-3, 6e-3};  // 6 ms is an odd multiple of 2 ms
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  c.observation_times = {8e-3, 4e-3};
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  c.observation_times = {};
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  c = memory(0.1, 0, 1);
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
  c = memory(0.1, 10, 1);
  c.bang_bang = true;
  c.t_b = 0.0;
  CHECK(code_of([&] { validate(c); }) == Errc::invalid_argument);
}

TEST_CASE("interval draws reject non-positive intervals") {
  int calls = 0;
  const auto stuck = [&] {
    ++calls;
    return -10.0;
  };
  CHECK(code_of([&] { draw_interval(kMean, 0.25, stuck, 100); }) == Errc::simulation);
  CHECK(calls == 101);
  std::vector<double> seq{-5.0, -4.1, 0.4};
  std::size_t i = 0;
  const auto scripted = [&] { return seq[i++]; };
  CHECK(draw_interval(kMean, 0.25, scripted, 100) == doctest::Approx(kMean * 1.1));
  i = 0;
  CHECK(code_of([&] { draw_interval(kMean, 0.25, scripted, 1); }) == Errc::simulation);
}

TEST_CASE("memory without randomness keeps full coherence") {
  for (Readout mode : {Readout::flip_aligned, Readout::fixed_time}) {
    auto c = memory(0.0, 20, 3);
    c.readout = mode;
    const auto r = run_memory(c);
    for (const auto& p : r.curve.points) CHECK(p.magnitude == doctest::Approx(1.0).epsilon(1e-10));
  }
  auto bb = memory(0.0, 20, 3);
  bb.bang_bang = true;
  bb.t_b = 0.5e-3;
  for (const auto& p : run_memory(bb).curve.points) CHECK(p.magnitude == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("memory bang-bang warns when t_b is not small against alpha D") {
  auto c = memory(0.25, 10, 3);
  c.bang_bang = true;
  c.t_b = 0.5e-3;
  CHECK(run_memory(c).warnings.size() == 1);
  c.t_b = 0.1e-3;
  CHECK(run_memory(c).warnings.empty());
}

TEST_CASE("memory decay is exponential with T2 proportional to 1/alpha^2") {
  std::vector<double> rate_per_alpha2;
  for (double alpha : {0.10, 0.15, 0.20, 0.25}) {
    auto c = memory(alpha, 10000, 4242);
    c.observation_times.clear();
    for (int k = 5; k <= 25; ++k) c.observation_times.push_back(k * 2 * kMean);  // 20..100 ms
    const auto r = run_memory(c);
    REQUIRE(r.curve.fit.has_value());
    CAPTURE(alpha);
    CHECK(r.curve.fit->r_squared > 0.99);
    CHECK(r.curve.fit->t2 == doctest::Approx(t2_star(kJ, alpha, kMean)).epsilon(0.05));
    rate_per_alpha2.push_back(1.0 / (r.curve.fit->t2 * alpha * alpha));
  }
  const auto [lo, hi] = std::minmax_element(rate_per_alpha2.begin(), rate_per_alpha2.end());
  double mean = 0.0;
  for (double v : rate_per_alpha2) mean += v / rate_per_alpha2.size();
  CHECK((*hi - *lo) / mean < 0.10);
}

TEST_CASE("fixed-time readout produces a valid curve") {
  auto c = memory(0.2, 500, 8);
  c.readout = Readout::fixed_time;
  const auto r = run_memory(c);
  REQUIRE(r.curve.points.size() == 25);
  for (const auto& p : r.curve.points) {
    CHECK(p.magnitude >= 0.0);
    CHECK(p.magnitude <= 1.0 + 1e-12);
  }
  CHECK(r.curve.points.back().magnitude < r.curve.points.front().magnitude);
}

TEST_CASE("toggling-frame readout helpers") {
  const Mat4 rho = initial_joint_state();
  CHECK(std::abs(toggling_frame_amplitude(rho, Mat2::identity()) - 1.0) < 1e-15);
  // After a y pi pulse the lab amplitude is -1; the toggling frame undoes it.
  const Mat2 v = rotation_pulse(Axis::y, kPi);
  const Mat4 rotated = conjugate(tensor(v, Mat2::identity()), rho);
  CHECK(std::abs(toggling_frame_amplitude(rotated, Mat2::identity()) + 1.0) < 1e-15);
  CHECK(std::abs(toggling_frame_amplitude(rotated, v) - 1.0) < 1e-15);
  const PulseSchedule s(CouplingSystem(kJ),
                        {{1e-3, Qubit::system, Axis::x, kPi}, {2e-3, Qubit::system, Axis::y, kPi}}, 3e-3);
  CHECK(max_abs_diff(control_rotation(s, 1.5e-3), rotation_pulse(Axis::x, kPi)) < 1e-15);
  CHECK(max_abs_diff(control_rotation(s, 2e-3), rotation_pulse(Axis::y, kPi) * rotation_pulse(Axis::x, kPi)) < 1e-15);
  CHECK(approx_equal(control_rotation(s, 0.5e-3), Mat2::identity(), 0.0));
}
