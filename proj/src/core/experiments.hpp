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

// Monte Carlo experiments with qubit 2 as a randomized environment for
// qubit 1: the transmission line (one random noise window) and the quantum
// memory (Gaussian-interval flip train), each optionally under bang-bang
// control of qubit 1.

#include <cstdint>
#include <string>
#include <vector>

#include "core/fit.hpp"
#include "core/linalg.hpp"
#include "core/pulse.hpp"

namespace dephase {

enum class TrainStart {
  at_window,    // first bang-bang pulse coincides with the first flip
  random_phase  // train starts u ~ U[0, t_b) before the first flip
};

struct TransmissionConfig {
  double j = 0.0;           // rad/s
  double total_time = 0.0;  // T, s
  double t1 = 0.0;          // first flip of qubit 2, s
  bool bang_bang = false;
  double t_b = 0.0;                   // s
  std::size_t pulses_per_trial = 0;   // 0 selects default_pulse_count
  TrainStart train_start = TrainStart::at_window;
  std::size_t trials = 10000;
  std::size_t group_size = 16;
  std::uint64_t seed = 0;
  bool remove_trivial_phase = true;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct EnsembleResult {
  std::vector<Complex> trials;  // qubit-1 amplitude a_x + i a_y per trial
  std::vector<Complex> groups;  // means over consecutive blocks of group_size
  Complex grand{};
  double observation_time = 0.0;
};

// Smallest count covering the 2 pi / J window plus one interval, rounded up
// to a multiple of the 8-step axis cycle.
std::size_t default_pulse_count(double j, double t_b);

// Throws Errc::invalid_argument on a violated invariant.
void validate(const TransmissionConfig& cfg);

// One trial: qubit 2 flipped at t1 and t1 + delta; bang-bang train (if any)
// starting at t1 - train_offset.
PulseSchedule transmission_schedule(const TransmissionConfig& cfg, double delta, double train_offset);

// Qubit-1 amplitude at T for one trial (config assumed validated).
Complex transmission_amplitude(const TransmissionConfig& cfg, double delta, double train_offset);

EnsembleResult run_transmission(const TransmissionConfig& cfg);

enum class Readout {
  flip_aligned,  // qubit 1 read right after the 2n-th flip, for nominal time 2 n D
  fixed_time     // qubit 1 read at the nominal time itself
};

struct MemoryConfig {
  double j = 0.0;              // rad/s
  double mean_interval = 0.0;  // D, s
  double alpha = 0.0;          // in [0, 1/4]
  std::vector<double> observation_times;  // s, ascending; even multiples of D for flip_aligned
  std::size_t trials = 10000;
  bool bang_bang = false;
  double t_b = 0.0;  // s
  std::uint64_t seed = 0;
  Readout readout = Readout::flip_aligned;
  int max_rejections = 100;
  unsigned threads = 0;
};

struct MemoryResult {
  DecayCurve curve;
  std::vector<Complex> mean_amplitudes;  // one per observation time
  std::vector<std::string> warnings;
};

void validate(const MemoryConfig& cfg);

// D (1 + alpha xi) with xi drawn from next_normal(), redrawn while the
// interval is not positive; Errc::simulation after max_rejections
// consecutive rejections.
template <class NormalSource>
double draw_interval(double mean_interval, double alpha, NormalSource&& next_normal, int max_rejections) {
  for (int attempt = 0; attempt <= max_rejections; ++attempt) {
    const double delta = mean_interval * (1.0 + alpha * next_normal());
    if (delta > 0.0) return delta;
  }
  fail(Errc::simulation, "flip interval resampling exhausted: too many non-positive intervals in a row");
}

MemoryResult run_memory(const MemoryConfig& cfg);

// Qubit-1 amplitude 2 rho_10 read in the frame that undoes the accumulated
// qubit-1 control rotation `control` (product of applied qubit-1 pulses).
Complex toggling_frame_amplitude(const Mat4& joint, const Mat2& control);

// Product of the qubit-1 pulses with time <= until, latest on the left.
Mat2 control_rotation(const PulseSchedule& sched, double until);

// Initial joint state: qubit 1 along +x, qubit 2 in |0>.
Mat4 initial_joint_state();

}  // namespace dephase
