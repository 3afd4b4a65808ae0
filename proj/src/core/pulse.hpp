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

// Pulse-level dynamics of the coupled qubit pair: phase-shift gates, ideal
// (zero-width) rotation pulses, free evolution under H = J Iz (x) Iz, and
// schedule simulation.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/linalg.hpp"

namespace dephase {

enum class Axis { x, minus_x, y, minus_y };

enum class Qubit { system = 1, environment = 2 };

const char* axis_name(Axis a);  // "x", "-x", "y", "-y"
Axis parse_axis(std::string_view name);

class CouplingSystem {
 public:
  // j: coupling in rad/s, must be positive and finite.
  explicit CouplingSystem(double j);
  double j() const { return j_; }

 private:
  double j_;
};

// S(theta) = exp(i theta sigma_z / 2).
Mat2 phase_shift(double theta);

// exp(-i (angle/2) sigma_axis), with sigma_{-x} = -sigma_x etc.
Mat2 rotation_pulse(Axis axis, double angle);

// Qubit-1 propagator over tau with qubit 2 frozen in |env_state>:
// S(-J tau / 2) for |0>, S(J tau / 2) for |1>.
Mat2 conditional_evolution(const CouplingSystem& sys, double tau, int env_state);

// exp(-i H tau) for H = J Iz (x) Iz; diagonal.
Mat4 free_evolution(const CouplingSystem& sys, double tau);

struct PulseEvent {
  double time;
  Qubit target;
  Axis axis;
  double angle;
};

class PulseSchedule {
 public:
  // Events are stably sorted by time; at equal times qubit-2 events come
  // first. Throws Errc::invalid_argument if T is not positive or an event
  // lies outside [0, T] or has a non-finite angle.
  PulseSchedule(CouplingSystem system, std::vector<PulseEvent> events, double total_time);

  const CouplingSystem& system() const { return system_; }
  const std::vector<PulseEvent>& events() const { return events_; }
  double total_time() const { return total_time_; }

 private:
  CouplingSystem system_;
  std::vector<PulseEvent> events_;
  double total_time_;
};

Mat4 pulse_unitary(const PulseEvent& e);

// Evolves rho0 from t = 0 to T.
Density4 simulate_schedule(const PulseSchedule& sched, const Density4& rho0);

// Joint states at each readout time (ascending, within [0, T]); a readout at
// time t sees every event with time <= t.
std::vector<Mat4> simulate_snapshots(const PulseSchedule& sched, const Mat4& rho0,
                                     std::span<const double> readout_times);

// First n entries of the periodic cycle (x, -x, y, -y, -x, x, -y, y).
std::vector<Axis> cyclic_axes(std::size_t n);

struct LabFrameParams {
  double omega_01;  // rad/s
  double omega_02;  // rad/s
  double j;         // rad/s
};

Mat4 lab_frame_hamiltonian(const LabFrameParams& p);
Mat4 rotating_frame(const LabFrameParams& p, double t);

// Frobenius distance between R H R^dagger + i dR/dt R^dagger (central
// difference with step dt) and J Iz (x) Iz.
double verify_rotating_frame(const LabFrameParams& p, double t, double dt);

// Structured text form: {"J": ..., "total_time": ..., "events": [{"time",
// "target", "axis", "angle"}, ...]}.
std::string schedule_to_json(const PulseSchedule& sched);
PulseSchedule schedule_from_json(std::string_view text);

}  // namespace dephase
