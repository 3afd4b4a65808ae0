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

#include "core/pulse.hpp"
#include "support/oracles.hpp"

using namespace dephase;
using oracle::Complex;
using oracle::kPi;

namespace {

const double kJ = oracle::kReferenceJ;

Mat2 plus_state() { return Mat2{0.5, 0.5, 0.5, 0.5}; }

// Equality of unitaries up to a global phase, through their action on operators.
bool same_action(const Mat2& a, const Mat2& b, double tol) {
  for (std::size_t k = 0; k < 4; ++k)
    if (max_abs_diff(conjugate(a, pauli::basis(k)), conjugate(b, pauli::basis(k))) > tol) return false;
  return true;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::io;
}

Mat4 start_state(int env) { return tensor(plus_state(), ket_bra(env, env)); }

}  // namespace

TEST_CASE("phase shift gate") {
  CHECK(approx_equal(phase_shift(0.0), Mat2::identity(), 0.0));
  const Mat2 rho{0.5, 0.5, 0.5, 0.5};
  CHECK(std::abs(conjugate(phase_shift(kPi), rho)(0, 1) + 0.5) < 1e-15);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int k = 0; k < 100; ++k) {
    const double a = u(rng), b = u(rng);
    CHECK(max_abs_diff(phase_shift(a) * phase_shift(b), phase_shift(a + b)) < 1e-13);
    CHECK(std::abs(conjugate(phase_shift(a), rho)(0, 1) - 0.5 * std::polar(1.0, a)) < 1e-14);
    // Independent definition exp(i theta sigma_z / 2).
    CHECK(max_abs_diff(phase_shift(a), oracle::expm(pauli::z() * Complex(0.0, a / 2))) < 1e-12);
  }
}

TEST_CASE("rotation pulses") {
  const Mat2 v = rotation_pulse(Axis::x, kPi);
  CHECK(max_abs_diff(v, pauli::x() * Complex(0.0, -1.0)) < 1e-15);
  CHECK(max_abs_diff(rotation_pulse(Axis::minus_x, kPi), v.adjoint()) < 1e-15);
  CHECK(max_abs_diff(rotation_pulse(Axis::minus_y, 0.3), rotation_pulse(Axis::y, -0.3)) < 1e-15);

  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int k = 0; k < 100; ++k) {
    const double theta = u(rng);
    CHECK(max_abs_diff(v.adjoint() * phase_shift(theta) * v, phase_shift(-theta)) < 1e-13);
    CHECK(same_action(v.adjoint() * phase_shift(theta) * v * phase_shift(theta), Mat2::identity(), 1e-13));
    for (Axis a : {Axis::x, Axis::minus_x, Axis::y, Axis::minus_y}) {
      const Mat2 sigma = a == Axis::x ? pauli::x() : a == Axis::minus_x ? pauli::x() * Complex(-1.0)
                         : a == Axis::y ? pauli::y() : pauli::y() * Complex(-1.0);
      CHECK(max_abs_diff(rotation_pulse(a, theta), oracle::expm(sigma * Complex(0.0, -theta / 2))) < 1e-12);
    }
  }
  const Mat2 out = conjugate(rotation_pulse(Axis::y, kPi / 2), ket_bra(0, 0));
  CHECK(max_abs_diff(out, plus_state()) < 1e-15);
}

TEST_CASE("axis names round trip") {
  for (Axis a : {Axis::x, Axis::minus_x, Axis::y, Axis::minus_y}) CHECK(parse_axis(axis_name(a)) == a);
  CHECK(code_of([] { parse_axis("z"); }) == Errc::invalid_argument);
}

TEST_CASE("conditional evolution") {
  const CouplingSystem sys(kJ);
  const double tau = 1.7e-3;
  CHECK(same_action(conditional_evolution(sys, tau, 1) * conditional_evolution(sys, tau, 0), Mat2::identity(),
                    1e-14));
  const Mat2 half_turn = conditional_evolution(sys, 2 * kPi / kJ, 1);
  CHECK(std::abs(conjugate(half_turn, plus_state())(0, 1) + 0.5) < 1e-12);
  CHECK(approx_equal(conditional_evolution(sys, 0.0, 0), Mat2::identity(), 0.0));
  CHECK(code_of([&] { conditional_evolution(sys, -1e-3, 0); }) == Errc::invalid_argument);
  CHECK(code_of([&] { conditional_evolution(sys, 1e-3, 2); }) == Errc::invalid_argument);
  CHECK(code_of([] { CouplingSystem bad(0.0); }) == Errc::invalid_argument);
}

TEST_CASE("free evolution matches the exponential of -i J Iz Iz tau") {
  const CouplingSystem sys(kJ);
  const Mat4 h = tensor(spin_z(), spin_z()) * Complex(kJ);
  for (double tau : {0.0, 1e-4, 2.3e-3, 1.1e-2}) {
    CHECK(max_abs_diff(free_evolution(sys, tau), oracle::expm(h * Complex(0.0, -tau))) < 1e-12);
    // Block structure: qubit-1 block for env |e> is the conditional evolution.
    const Mat4 u = free_evolution(sys, tau);
    for (int env = 0; env < 2; ++env) {
      const Mat2 block{u(env, env), u(env, 2 + env), u(2 + env, env), u(2 + env, 2 + env)};
      CHECK(same_action(block, conditional_evolution(sys, tau, env), 1e-13));
    }
  }
}

TEST_CASE("schedule simulation examples") {
  const CouplingSystem sys(kJ);
  SUBCASE("empty schedule equals the 2x2 conditional evolution") {
    const double t = 3.3e-3;
    const Mat2 rho = partial_trace_env(simulate_schedule(PulseSchedule(sys, {}, t), Density4(start_state(0))).matrix());
    CHECK(max_abs_diff(rho, conjugate(conditional_evolution(sys, t, 0), plus_state())) < 1e-13);
  }
  SUBCASE("one noise window shifts the phase by J delta - J T / 2") {
    const double t1 = 2e-3, delta = 1.3e-3, total = 12e-3;
    const PulseSchedule s(sys, {{t1, Qubit::environment, Axis::x, kPi}, {t1 + delta, Qubit::environment, Axis::x, kPi}},
                          total);
    const Mat2 rho = partial_trace_env(simulate_schedule(s, Density4(start_state(0))).matrix());
    const double theta = kJ * delta - kJ * total / 2;
    CHECK(std::abs(rho(0, 1) - 0.5 * std::polar(1.0, theta)) < 1e-12);
  }
  SUBCASE("an alternating V, V^dagger train refocuses a frozen environment") {
    for (int env = 0; env < 2; ++env)
      for (int n : {1, 2, 5}) {
        const double t_b = 0.3e-3;
        std::vector<PulseEvent> ev;
        for (int k = 0; k < 2 * n; ++k)
          ev.push_back({(k + 1) * t_b, Qubit::system, k % 2 ? Axis::minus_x : Axis::x, kPi});
        const PulseSchedule s(sys, ev, 2 * n * t_b);
        const Mat4 out = simulate_schedule(s, Density4(start_state(env))).matrix();
        CHECK(max_abs_diff(out, start_state(env)) < 1e-10);
      }
  }
}

TEST_CASE("schedule invariants and ordering") {
  const CouplingSystem sys(kJ);
  CHECK(code_of([&] { PulseSchedule(sys, {}, 0.0); }) == Errc::invalid_argument);
  CHECK(code_of([&] { PulseSchedule(sys, {{2e-3, Qubit::system, Axis::x, kPi}}, 1e-3); }) == Errc::invalid_argument);
  CHECK(code_of([&] { PulseSchedule(sys, {{-1e-6, Qubit::system, Axis::x, kPi}}, 1e-3); }) == Errc::invalid_argument);
  CHECK_NOTHROW(PulseSchedule(sys, {{0.0, Qubit::system, Axis::x, kPi}, {1e-3, Qubit::system, Axis::x, kPi}}, 1e-3));

  const PulseSchedule s(sys,
                        {{5e-4, Qubit::system, Axis::y, 1.0},
                         {1e-4, Qubit::system, Axis::x, 2.0},
                         {5e-4, Qubit::environment, Axis::x, kPi},
                         {5e-4, Qubit::system, Axis::minus_y, 3.0}},
                        1e-3);
  const auto& e = s.events();
  CHECK(e[0].time == 1e-4);
  CHECK(e[1].target == Qubit::environment);
  CHECK(e[2].angle == 1.0);  // stable among qubit-1 events
  CHECK(e[3].angle == 3.0);
}

TEST_CASE("cyclic axis permutation") {
  const std::vector<Axis> cycle{Axis::x, Axis::minus_x, Axis::y, Axis::minus_y,
                                Axis::minus_x, Axis::x, Axis::minus_y, Axis::y};
  CHECK(cyclic_axes(8) == cycle);
  CHECK(cyclic_axes(0).empty());
  const auto nine = cyclic_axes(9);
  CHECK(nine.size() == 9);
  CHECK(nine[8] == Axis::x);
  const auto many = cyclic_axes(37);
  for (std::size_t k = 0; k < many.size(); ++k) CHECK(many[k] == cycle[k % 8]);
  // Eight cyclic pi pulses compose to the identity map.
  Mat2 prod = Mat2::identity();
  for (Axis a : cycle) prod = rotation_pulse(a, kPi) * prod;
  CHECK(same_action(prod, Mat2::identity(), 1e-14));
}

TEST_CASE("echo identity S(b) V^dagger S(b + a) V S(a) acts as the identity") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  const Mat2 v = rotation_pulse(Axis::x, kPi);
  for (int k = 0; k < 500; ++k) {
    const double a = u(rng), b = u(rng);
    const Mat2 w = phase_shift(b) * v.adjoint() * phase_shift(b + a) * v * phase_shift(a);
    const Mat2 rho = oracle::random_density<2>(rng);
    CHECK(max_abs_diff(conjugate(w, rho), rho) < 1e-12);
  }
}

TEST_CASE("2x2 conditional picture agrees with the 4x4 simulation") {
  const CouplingSystem sys(kJ);
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Axis axes[] = {Axis::x, Axis::minus_x, Axis::y, Axis::minus_y};
  for (int trial = 0; trial < 200; ++trial) {
    const double total = 5e-3 + 20e-3 * unit(rng);
    const int env0 = trial % 2;
    std::vector<PulseEvent> ev;
    const int count = 1 + static_cast<int>(30 * unit(rng));
    for (int k = 0; k < count; ++k) {
      const double t = total * unit(rng);
      if (unit(rng) < 0.4)
        ev.push_back({t, Qubit::environment, Axis::x, kPi});
      else
        ev.push_back({t, Qubit::system, axes[k % 4], 2 * kPi * unit(rng)});
    }
    const PulseSchedule s(sys, ev, total);
    const Mat2 rho0 = oracle::random_density<2>(rng);

    // 2x2 path over the sorted events.
    Mat2 u = Mat2::identity();
    double now = 0.0;
    int env = env0;
    for (const auto& e : s.events()) {
      u = conditional_evolution(sys, e.time - now, env) * u;
      now = e.time;
      if (e.target == Qubit::environment)
        env = 1 - env;
      else
        u = rotation_pulse(e.axis, e.angle) * u;
    }
    u = conditional_evolution(sys, total - now, env) * u;

    const Mat4 joint = simulate_schedule(s, Density4(tensor(rho0, ket_bra(env0, env0)))).matrix();
    CHECK(max_abs_diff(partial_trace_env(joint), conjugate(u, rho0)) < 1e-10);
  }
}

TEST_CASE("long schedules preserve trace and Hermiticity") {
  const CouplingSystem sys(kJ);
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Axis axes[] = {Axis::x, Axis::minus_x, Axis::y, Axis::minus_y};
  std::vector<PulseEvent> ev;
  const double total = 0.2;
  for (int k = 0; k < 10000; ++k)
    ev.push_back({total * unit(rng), k % 3 ? Qubit::system : Qubit::environment, axes[k % 4], 2 * kPi * unit(rng)});
  const Mat4 rho0 = oracle::random_density<4>(rng);
  const Mat4 out = simulate_schedule(PulseSchedule(sys, ev, total), Density4(rho0)).matrix();
  CHECK(std::abs(out.trace() - 1.0) < 1e-12);
  CHECK(max_abs_diff(out, out.adjoint()) < 1e-12);
  CHECK(is_density(out, 1e-10));
}

TEST_CASE("snapshots see events up to and including the readout time") {
  const CouplingSystem sys(kJ);
  const PulseSchedule s(sys, {{1e-3, Qubit::system, Axis::x, kPi}, {2e-3, Qubit::environment, Axis::x, kPi}}, 3e-3);
  const std::vector<double> times{0.0, 1e-3, 1.5e-3, 2e-3, 3e-3};
  const auto snaps = simulate_snapshots(s, start_state(0), times);
  REQUIRE(snaps.size() == times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    std::vector<PulseEvent> upto;
    for (const auto& e : s.events())
      if (e.time <= times[k]) upto.push_back(e);
    const Mat4 direct = times[k] == 0.0
                            ? start_state(0)
                            : simulate_schedule(PulseSchedule(sys, upto, times[k]), Density4(start_state(0))).matrix();
    CHECK(max_abs_diff(snaps[k], direct) < 1e-12);
  }
}

TEST_CASE("rotating frame reduces the lab Hamiltonian to J Iz Iz") {
  SUBCASE("no Larmor precession: exact") {
    CHECK(verify_rotating_frame({0.0, 0.0, kJ}, 1e-3, 1e-6) == 0.0);
  }
  SUBCASE("residual is second order in dt") {
    const LabFrameParams p{2 * kPi * 125.0, 2 * kPi * 500.0, kJ};
    const double r1 = verify_rotating_frame(p, 1e-3, 1e-6);
    const double r2 = verify_rotating_frame(p, 1e-3, 5e-7);
    const double r3 = verify_rotating_frame(p, 1e-3, 2.5e-7);
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.02));
    CHECK(r2 / r3 == doctest::Approx(4.0).epsilon(0.02));
    const double h = lab_frame_hamiltonian(p).frobenius_norm();
    CHECK(verify_rotating_frame(p, 1e-3, 1e-7) < 1e-3 * h);
  }
  SUBCASE("without coupling only the finite-difference error remains") {
    const LabFrameParams p{2 * kPi * 125.0, 2 * kPi * 500.0, 0.0};
    const double r1 = verify_rotating_frame(p, 1e-3, 1e-6);
    const double r2 = verify_rotating_frame(p, 1e-3, 5e-7);
    CHECK(r1 > 0.0);
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.02));
    // Same error as with coupling: J Iz Iz commutes with R.
    CHECK(r1 == doctest::Approx(verify_rotating_frame({p.omega_01, p.omega_02, kJ}, 1e-3, 1e-6)).epsilon(1e-6));
  }
  CHECK(code_of([] { verify_rotating_frame({1.0, 1.0, 1.0}, 0.0, 0.0); }) == Errc::invalid_argument);
}

TEST_CASE("schedule JSON round trip and error locations") {
  const CouplingSystem sys(kJ);
  const PulseSchedule s(sys,
                        {{1e-4, Qubit::system, Axis::minus_y, kPi},
                         {2.5e-4, Qubit::environment, Axis::x, kPi},
                         {3e-4, Qubit::system, Axis::y, 0.123456789012345}},
                        1e-3);
  const PulseSchedule back = schedule_from_json(schedule_to_json(s));
  CHECK(back.system().j() == sys.j());
  CHECK(back.total_time() == s.total_time());
  REQUIRE(back.events().size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(back.events()[k].time == s.events()[k].time);
    CHECK(back.events()[k].target == s.events()[k].target);
    CHECK(back.events()[k].axis == s.events()[k].axis);
    CHECK(back.events()[k].angle == s.events()[k].angle);
  }
  const auto message = [](const std::string& text) {
    try {
      schedule_from_json(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(R"({"J": 1, "total_time": 1, "events": [{"time": 0.5, "target": 1, "axis": "z", "angle": 1}]})")
            .find("/events/0/axis") != std::string::npos);
  CHECK(message(R"({"J": 1, "total_time": 1, "events": [{"time": 0.5, "target": 3, "axis": "x", "angle": 1}]})")
            .find("/events/0/target") != std::string::npos);
  CHECK(message(R"({"J": 1, "events": []})").find("total_time") != std::string::npos);
  CHECK(!message("{not json").empty());
}
