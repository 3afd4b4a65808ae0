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

#include "core/pulse.hpp"

#include <algorithm>
#include <cmath>

namespace dephase {

const char* axis_name(Axis a) {
  switch (a) {
    case Axis::x: return "x";
    case Axis::minus_x: return "-x";
    case Axis::y: return "y";
    case Axis::minus_y: return "-y";
  }
  return "?";
}

Axis parse_axis(std::string_view name) {
  if (name == "x") return Axis::x;
  if (name == "-x") return Axis::minus_x;
  if (name == "y") return Axis::y;
  if (name == "-y") return Axis::minus_y;
  fail(Errc::invalid_argument, "unknown pulse axis '" + std::string(name) + "'");
}

CouplingSystem::CouplingSystem(double j) : j_(j) {
  require(std::isfinite(j) && j > 0.0, Errc::invalid_argument, "coupling J must be positive and finite");
}

Mat2 phase_shift(double theta) {
  return Mat2::diagonal({std::polar(1.0, 0.5 * theta), std::polar(1.0, -0.5 * theta)});
}

Mat2 rotation_pulse(Axis axis, double angle) {
  Mat2 sigma;
  switch (axis) {
    case Axis::x: sigma = pauli::x(); break;
    case Axis::minus_x: sigma = pauli::x() * Complex(-1.0); break;
    case Axis::y: sigma = pauli::y(); break;
    case Axis::minus_y: sigma = pauli::y() * Complex(-1.0); break;
  }
  // sigma^2 = I, so exp(-i a sigma / 2) = cos(a/2) I - i sin(a/2) sigma.
  return Mat2::identity() * Complex(std::cos(0.5 * angle)) + sigma * Complex(0.0, -std::sin(0.5 * angle));
}

Mat2 conditional_evolution(const CouplingSystem& sys, double tau, int env_state) {
  require(std::isfinite(tau) && tau >= 0.0, Errc::invalid_argument, "evolution time must be non-negative");
  require(env_state == 0 || env_state == 1, Errc::invalid_argument, "environment state must be 0 or 1");
  const double theta = 0.5 * sys.j() * tau;
  return phase_shift(env_state == 0 ? -theta : theta);
}

Mat4 free_evolution(const CouplingSystem& sys, double tau) {
  // Eigenvalues of J Iz (x) Iz on |00>, |01>, |10>, |11>.
  const double e = 0.25 * sys.j();
  const std::array<double, 4> energies{e, -e, -e, e};
  std::array<Complex, 4> d{};
  for (std::size_t i = 0; i < 4; ++i) d[i] = std::polar(1.0, -energies[i] * tau);
  return Mat4::diagonal(d);
}

namespace {

int order_rank(Qubit q) { return q == Qubit::environment ? 0 : 1; }

// rho -> D rho D^dagger for diagonal D = exp(-i H tau): rho_ab picks up
// exp(-i (E_a - E_b) tau).
void evolve_free(Mat4& rho, double j, double tau) {
  if (tau == 0.0) return;
  const double e = 0.25 * j;
  const std::array<double, 4> energies{e, -e, -e, e};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const double w = energies[a] - energies[b];
      if (w != 0.0) rho(a, b) *= std::polar(1.0, -w * tau);
    }
}

}  // namespace

PulseSchedule::PulseSchedule(CouplingSystem system, std::vector<PulseEvent> events, double total_time)
    : system_(system), events_(std::move(events)), total_time_(total_time) {
  require(std::isfinite(total_time) && total_time > 0.0, Errc::invalid_argument,
          "schedule total time must be positive and finite");
  for (const auto& e : events_) {
    require(std::isfinite(e.time) && e.time >= 0.0 && e.time <= total_time, Errc::invalid_argument,
            "pulse event time lies outside [0, T]");
    require(std::isfinite(e.angle), Errc::invalid_argument, "pulse angle must be finite");
    require(e.target == Qubit::system || e.target == Qubit::environment, Errc::invalid_argument,
            "pulse target must be qubit 1 or qubit 2");
  }
  std::stable_sort(events_.begin(), events_.end(), [](const PulseEvent& a, const PulseEvent& b) {
    if (a.time != b.time) return a.time < b.time;
    return order_rank(a.target) < order_rank(b.target);
  });
}

Mat4 pulse_unitary(const PulseEvent& e) {
  const Mat2 r = rotation_pulse(e.axis, e.angle);
  return e.target == Qubit::system ? tensor(r, Mat2::identity()) : tensor(Mat2::identity(), r);
}

std::vector<Mat4> simulate_snapshots(const PulseSchedule& sched, const Mat4& rho0,
                                     std::span<const double> readout_times) {
  std::vector<Mat4> out;
  out.reserve(readout_times.size());
  const double j = sched.system().j();
  const auto& events = sched.events();
  Mat4 rho = rho0;
  double now = 0.0;
  std::size_t next = 0;
  for (double t : readout_times) {
    require(std::isfinite(t) && t >= now && t <= sched.total_time(), Errc::invalid_argument,
            "readout times must be ascending and within [0, T]");
    while (next < events.size() && events[next].time <= t) {
      evolve_free(rho, j, events[next].time - now);
      now = events[next].time;
      rho = conjugate(pulse_unitary(events[next]), rho);
      ++next;
    }
    evolve_free(rho, j, t - now);
    now = t;
    out.push_back(rho);
  }
  return out;
}

Density4 simulate_schedule(const PulseSchedule& sched, const Density4& rho0) {
  const double end = sched.total_time();
  return Density4::trusted(simulate_snapshots(sched, rho0.matrix(), std::span<const double>(&end, 1)).front());
}

std::vector<Axis> cyclic_axes(std::size_t n) {
  static constexpr std::array<Axis, 8> cycle{Axis::x,       Axis::minus_x, Axis::y, Axis::minus_y,
                                             Axis::minus_x, Axis::x,       Axis::minus_y, Axis::y};
  std::vector<Axis> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = cycle[k % cycle.size()];
  return out;
}

Mat4 lab_frame_hamiltonian(const LabFrameParams& p) {
  const Mat2 iz = spin_z();
  const Mat2 id = Mat2::identity();
  return tensor(iz, id) * Complex(-p.omega_01) + tensor(id, iz) * Complex(-p.omega_02) +
         tensor(iz, iz) * Complex(p.j);
}

Mat4 rotating_frame(const LabFrameParams& p, double t) {
  // exp(-i w Iz t) = diag(e^{-i w t/2}, e^{i w t/2})
  const auto r = [t](double w) {
    return Mat2::diagonal({std::polar(1.0, -0.5 * w * t), std::polar(1.0, 0.5 * w * t)});
  };
  return tensor(r(p.omega_01), r(p.omega_02));
}

double verify_rotating_frame(const LabFrameParams& p, double t, double dt) {
  require(std::isfinite(dt) && dt > 0.0, Errc::invalid_argument, "finite-difference step must be positive");
  require(std::isfinite(p.omega_01) && std::isfinite(p.omega_02) && std::isfinite(p.j) && std::isfinite(t),
          Errc::invalid_argument, "lab-frame parameters must be finite");
  const Mat4 h = lab_frame_hamiltonian(p);
  const Mat4 r = rotating_frame(p, t);
  const Mat4 dr = (rotating_frame(p, t + dt) - rotating_frame(p, t - dt)) * Complex(1.0 / (2.0 * dt));
  const Mat4 h_rot = r * h * r.adjoint() + Complex(0.0, 1.0) * (dr * r.adjoint());
  const Mat4 target = tensor(spin_z(), spin_z()) * Complex(p.j);
  return (h_rot - target).frobenius_norm();
}

}  // namespace dephase
