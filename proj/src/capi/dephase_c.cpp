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

#include "dephase/dephase.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "core/analytic.hpp"
#include "core/channels.hpp"
#include "core/curve_csv.hpp"
#include "core/experiments.hpp"
#include "core/fit.hpp"
#include "core/linalg.hpp"
#include "core/pulse.hpp"

struct dph_channel_s {
  dephase::KrausChannel channel;
};

struct dph_schedule_s {
  double j;
  double total_time;
  std::vector<dephase::PulseEvent> events;
};

struct dph_ensemble_s {
  dephase::EnsembleResult result;
};

struct dph_curve_s {
  dephase::MemoryResult result;
};

namespace {

using dephase::Complex;
using dephase::Errc;
using dephase::Mat2;
using dephase::Mat4;

thread_local std::string g_last_error;

dph_status to_status(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return DPH_ERR_INVALID_ARGUMENT;
    case Errc::dimension_mismatch: return DPH_ERR_DIMENSION;
    case Errc::not_unitary: return DPH_ERR_NOT_UNITARY;
    case Errc::invalid_state: return DPH_ERR_INVALID_STATE;
    case Errc::completeness: return DPH_ERR_COMPLETENESS;
    case Errc::simulation: return DPH_ERR_SIMULATION;
    case Errc::io: return DPH_ERR_IO;
  }
  return DPH_ERR_INTERNAL;
}

dph_status set_error(dph_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body() and translates exceptions into status codes.
template <class Body>
dph_status guarded(Body&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return DPH_OK;
  } catch (const dephase::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(DPH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(DPH_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(DPH_ERR_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) throw dephase::Error(Errc::invalid_argument, std::string(name) + " must not be NULL");
}

// NULL pointers get their own status code, checked before guarded().
#define DPH_REQUIRE_NONNULL(p) \
  if ((p) == nullptr) return set_error(DPH_ERR_NULL_ARGUMENT, #p " must not be NULL")

template <std::size_t N>
dephase::Matrix<N> load(const dph_complex* m) {
  dephase::Matrix<N> out;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out(r, c) = Complex(m[r * N + c].re, m[r * N + c].im);
  return out;
}

template <std::size_t N>
void store(const dephase::Matrix<N>& m, dph_complex* out) {
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out[r * N + c] = {m(r, c).real(), m(r, c).imag()};
}

dph_complex to_c(Complex z) { return {z.real(), z.imag()}; }

void check_dim(int dim) {
  if (dim != 2 && dim != 4) throw dephase::Error(Errc::dimension_mismatch, "matrix dimension must be 2 or 4");
}

dephase::Axis to_axis(int axis) {
  switch (axis) {
    case DPH_AXIS_X: return dephase::Axis::x;
    case DPH_AXIS_MINUS_X: return dephase::Axis::minus_x;
    case DPH_AXIS_Y: return dephase::Axis::y;
    case DPH_AXIS_MINUS_Y: return dephase::Axis::minus_y;
    default: throw dephase::Error(Errc::invalid_argument, "unknown pulse axis");
  }
}

int from_axis(dephase::Axis a) {
  switch (a) {
    case dephase::Axis::x: return DPH_AXIS_X;
    case dephase::Axis::minus_x: return DPH_AXIS_MINUS_X;
    case dephase::Axis::y: return DPH_AXIS_Y;
    case dephase::Axis::minus_y: return DPH_AXIS_MINUS_Y;
  }
  return -1;
}

dephase::PulseSchedule to_schedule(const dph_schedule_s& s) {
  return dephase::PulseSchedule(dephase::CouplingSystem(s.j), s.events, s.total_time);
}

dephase::TransmissionConfig to_core(const dph_transmission_config& c) {
  dephase::TransmissionConfig cfg;
  cfg.j = c.j;
  cfg.total_time = c.total_time;
  cfg.t1 = c.t1;
  cfg.bang_bang = c.bang_bang != 0;
  cfg.t_b = c.t_b;
  cfg.pulses_per_trial = c.pulses_per_trial;
  switch (c.train_start) {
    case DPH_TRAIN_AT_WINDOW: cfg.train_start = dephase::TrainStart::at_window; break;
    case DPH_TRAIN_RANDOM_PHASE: cfg.train_start = dephase::TrainStart::random_phase; break;
    default: throw dephase::Error(Errc::invalid_argument, "unknown train start mode");
  }
  cfg.trials = c.trials;
  cfg.group_size = c.group_size;
  cfg.seed = c.seed;
  cfg.remove_trivial_phase = c.remove_trivial_phase != 0;
  cfg.threads = c.threads;
  return cfg;
}

dephase::MemoryConfig to_core(const dph_memory_config& c) {
  dephase::MemoryConfig cfg;
  cfg.j = c.j;
  cfg.mean_interval = c.mean_interval;
  cfg.alpha = c.alpha;
  if (c.observation_count > 0) {
    need(c.observation_times, "observation_times");
    cfg.observation_times.assign(c.observation_times, c.observation_times + c.observation_count);
  }
  cfg.trials = c.trials;
  cfg.bang_bang = c.bang_bang != 0;
  cfg.t_b = c.t_b;
  cfg.seed = c.seed;
  switch (c.readout) {
    case DPH_READOUT_FLIP_ALIGNED: cfg.readout = dephase::Readout::flip_aligned; break;
    case DPH_READOUT_FIXED_TIME: cfg.readout = dephase::Readout::fixed_time; break;
    default: throw dephase::Error(Errc::invalid_argument, "unknown readout mode");
  }
  cfg.max_rejections = c.max_rejections;
  cfg.threads = c.threads;
  return cfg;
}

void store_fit(const dephase::ExponentialFit& f, dph_fit* out) {
  out->t2 = f.t2;
  out->slope = f.slope;
  out->intercept = f.intercept;
  out->rms_residual = f.rms_residual;
  out->r_squared = f.r_squared;
  out->points_used = f.points_used;
  out->decays = f.decays ? 1 : 0;
}

template <class Fn>
dph_status scalar(double* out, Fn&& fn) {
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = fn(); });
}

}  // namespace

extern "C" {

const char* dph_version(void) { return "0.1.0"; }

const char* dph_status_string(dph_status status) {
  switch (status) {
    case DPH_OK: return "ok";
    case DPH_ERR_NULL_ARGUMENT: return "null argument";
    case DPH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DPH_ERR_DIMENSION: return "dimension mismatch";
    case DPH_ERR_NOT_UNITARY: return "not unitary";
    case DPH_ERR_INVALID_STATE: return "invalid state";
    case DPH_ERR_COMPLETENESS: return "completeness violation";
    case DPH_ERR_SIMULATION: return "simulation error";
    case DPH_ERR_IO: return "i/o error";
    case DPH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dph_last_error(void) { return g_last_error.c_str(); }

// ---- linear algebra

dph_status dph_tensor(const dph_complex a[4], const dph_complex b[4], dph_complex out[16]) {
  DPH_REQUIRE_NONNULL(a);
  DPH_REQUIRE_NONNULL(b);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] { store(dephase::tensor(load<2>(a), load<2>(b)), out); });
}

dph_status dph_partial_trace_env(const dph_complex m[16], dph_complex out[4]) {
  DPH_REQUIRE_NONNULL(m);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] { store(dephase::partial_trace_env(load<4>(m)), out); });
}

dph_status dph_matmul(const dph_complex* a, const dph_complex* b, int dim, dph_complex* out) {
  DPH_REQUIRE_NONNULL(a);
  DPH_REQUIRE_NONNULL(b);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    check_dim(dim);
    if (dim == 2)
      store(load<2>(a) * load<2>(b), out);
    else
      store(load<4>(a) * load<4>(b), out);
  });
}

dph_status dph_adjoint(const dph_complex* m, int dim, dph_complex* out) {
  DPH_REQUIRE_NONNULL(m);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    check_dim(dim);
    if (dim == 2)
      store(load<2>(m).adjoint(), out);
    else
      store(load<4>(m).adjoint(), out);
  });
}

dph_status dph_is_unitary(const dph_complex* m, int dim, double tol, int* result) {
  DPH_REQUIRE_NONNULL(m);
  DPH_REQUIRE_NONNULL(result);
  return guarded([&] {
    check_dim(dim);
    *result = dim == 2 ? dephase::is_unitary(load<2>(m), tol) : dephase::is_unitary(load<4>(m), tol);
  });
}

dph_status dph_is_density(const dph_complex* m, int dim, double tol, int* result) {
  DPH_REQUIRE_NONNULL(m);
  DPH_REQUIRE_NONNULL(result);
  return guarded([&] {
    check_dim(dim);
    *result = dim == 2 ? dephase::is_density(load<2>(m), tol) : dephase::is_density(load<4>(m), tol);
  });
}

dph_status dph_bloch_from_density(const dph_complex rho[4], double bloch[3]) {
  DPH_REQUIRE_NONNULL(rho);
  DPH_REQUIRE_NONNULL(bloch);
  return guarded([&] {
    const auto b = dephase::bloch_from_density(dephase::Density2(load<2>(rho)));
    bloch[0] = b.x;
    bloch[1] = b.y;
    bloch[2] = b.z;
  });
}

dph_status dph_density_from_bloch(const double bloch[3], dph_complex rho[4]) {
  DPH_REQUIRE_NONNULL(bloch);
  DPH_REQUIRE_NONNULL(rho);
  return guarded([&] { store(dephase::density_from_bloch({bloch[0], bloch[1], bloch[2]}).matrix(), rho); });
}

dph_status dph_amplitude(const dph_complex rho[4], dph_complex* value, double* phase) {
  DPH_REQUIRE_NONNULL(rho);
  return guarded([&] {
    const auto a = dephase::amplitude_of(dephase::Density2(load<2>(rho)));
    if (value) *value = to_c(a.value);
    if (phase) *phase = a.phase;
  });
}

// ---- channels

dph_status dph_channel_phase_flip(double p, dph_channel* out) {
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = new dph_channel_s{dephase::phase_flip(p)}; });
}

dph_status dph_channel_from_environment(const dph_complex u[16], const dph_complex rho_env[4], dph_channel* out) {
  DPH_REQUIRE_NONNULL(u);
  DPH_REQUIRE_NONNULL(rho_env);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    *out = new dph_channel_s{dephase::channel_from_environment(load<4>(u), dephase::Density2(load<2>(rho_env)))};
  });
}

dph_status dph_channel_from_mixing(const dph_complex* unitaries, const double* probabilities, size_t count,
                                   dph_channel* out) {
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    dephase::MixingEnsemble ens;
    if (count > 0) {
      need(unitaries, "unitaries");
      need(probabilities, "probabilities");
    }
    for (size_t k = 0; k < count; ++k) {
      ens.unitaries.push_back(load<2>(unitaries + 4 * k));
      ens.probabilities.push_back(probabilities[k]);
    }
    *out = new dph_channel_s{dephase::channel_from_mixing(ens)};
  });
}

dph_status dph_channel_from_kraus(const dph_complex* operators, size_t count, dph_channel* out) {
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    std::vector<Mat2> ops;
    if (count > 0) need(operators, "operators");
    for (size_t k = 0; k < count; ++k) ops.push_back(load<2>(operators + 4 * k));
    *out = new dph_channel_s{dephase::KrausChannel(std::move(ops), "kraus")};
  });
}

void dph_channel_free(dph_channel ch) { delete ch; }

size_t dph_channel_kraus_count(dph_channel ch) { return ch ? ch->channel.operators().size() : 0; }

dph_status dph_channel_kraus(dph_channel ch, size_t index, dph_complex out[4]) {
  DPH_REQUIRE_NONNULL(ch);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto& ops = ch->channel.operators();
    if (index >= ops.size()) throw dephase::Error(Errc::invalid_argument, "Kraus operator index out of range");
    store(ops[index], out);
  });
}

dph_status dph_channel_apply(dph_channel ch, const dph_complex rho[4], dph_complex out[4]) {
  DPH_REQUIRE_NONNULL(ch);
  DPH_REQUIRE_NONNULL(rho);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] { store(ch->channel.apply(dephase::Density2(load<2>(rho))).matrix(), out); });
}

dph_status dph_channels_equal(dph_channel a, dph_channel b, double tol, int* equal) {
  DPH_REQUIRE_NONNULL(a);
  DPH_REQUIRE_NONNULL(b);
  DPH_REQUIRE_NONNULL(equal);
  return guarded([&] { *equal = dephase::channels_equal_as_maps(a->channel, b->channel, tol) ? 1 : 0; });
}

dph_status dph_phase_average_factor(int family, double param, double q, dph_complex* out) {
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    dephase::PhaseDistribution dist;
    switch (family) {
      case DPH_PHASE_UNIFORM: dist = dephase::UniformPhase{}; break;
      case DPH_PHASE_GAUSSIAN: dist = dephase::GaussianPhase{param}; break;
      case DPH_PHASE_TWO_POINT: dist = dephase::TwoPointPhase{param, q}; break;
      default: throw dephase::Error(Errc::invalid_argument, "unsupported phase distribution family");
    }
    *out = to_c(dephase::phase_average_factor(dist));
  });
}

// ---- pulses

dph_status dph_phase_shift(double theta, dph_complex out[4]) {
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] { store(dephase::phase_shift(theta), out); });
}

dph_status dph_rotation_pulse(int axis, double angle, dph_complex out[4]) {
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] { store(dephase::rotation_pulse(to_axis(axis), angle), out); });
}

dph_status dph_conditional_evolution(double j, double tau, int env_state, dph_complex out[4]) {
  DPH_REQUIRE_NONNULL(out);
  return guarded(
      [&] { store(dephase::conditional_evolution(dephase::CouplingSystem(j), tau, env_state), out); });
}

dph_status dph_cyclic_axes(size_t n, int* out) {
  if (n > 0) DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto axes = dephase::cyclic_axes(n);
    for (size_t k = 0; k < n; ++k) out[k] = from_axis(axes[k]);
  });
}

dph_status dph_verify_rotating_frame(double omega_01, double omega_02, double j, double t, double dt,
                                     double* residual) {
  return scalar(residual, [&] { return dephase::verify_rotating_frame({omega_01, omega_02, j}, t, dt); });
}

dph_status dph_lab_frame_norm(double omega_01, double omega_02, double j, double* out) {
  return scalar(out, [&] { return dephase::lab_frame_hamiltonian({omega_01, omega_02, j}).frobenius_norm(); });
}

dph_status dph_schedule_create(double j, double total_time, dph_schedule* out) {
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    dephase::PulseSchedule probe(dephase::CouplingSystem(j), {}, total_time);
    *out = new dph_schedule_s{j, total_time, {}};
  });
}

dph_status dph_schedule_add_pulse(dph_schedule s, double time, int target, int axis, double angle) {
  DPH_REQUIRE_NONNULL(s);
  return guarded([&] {
    if (target != 1 && target != 2) throw dephase::Error(Errc::invalid_argument, "pulse target must be 1 or 2");
    dephase::PulseEvent e{time, static_cast<dephase::Qubit>(target), to_axis(axis), angle};
    // Validate against the schedule invariants before accepting.
    dephase::PulseSchedule probe(dephase::CouplingSystem(s->j), {e}, s->total_time);
    s->events.push_back(e);
  });
}

void dph_schedule_free(dph_schedule s) { delete s; }

size_t dph_schedule_event_count(dph_schedule s) { return s ? s->events.size() : 0; }

dph_status dph_schedule_simulate(dph_schedule s, const dph_complex rho0[16], dph_complex out[16]) {
  DPH_REQUIRE_NONNULL(s);
  DPH_REQUIRE_NONNULL(rho0);
  DPH_REQUIRE_NONNULL(out);
  return guarded(
      [&] { store(dephase::simulate_schedule(to_schedule(*s), dephase::Density4(load<4>(rho0))).matrix(), out); });
}

dph_status dph_schedule_to_json(dph_schedule s, char** json) {
  DPH_REQUIRE_NONNULL(s);
  DPH_REQUIRE_NONNULL(json);
  return guarded([&] {
    const std::string text = dephase::schedule_to_json(to_schedule(*s));
    auto* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *json = buf;
  });
}

dph_status dph_schedule_from_json(const char* json, dph_schedule* out) {
  DPH_REQUIRE_NONNULL(json);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto sched = dephase::schedule_from_json(json);
    *out = new dph_schedule_s{sched.system().j(), sched.total_time(), sched.events()};
  });
}

void dph_string_free(char* s) { delete[] s; }

// ---- closed-form laws

dph_status dph_kappa(double j, double t_b, double* out) {
  return scalar(out, [&] { return dephase::kappa(j, t_b); });
}
dph_status dph_kappa_fixed_start(double j, double t_b, double* out) {
  return scalar(out, [&] { return dephase::kappa_fixed_start(j, t_b); });
}
dph_status dph_lambda_factor(double j, double mean_interval, double alpha, double* out) {
  return scalar(out, [&] { return dephase::lambda_factor(j, mean_interval, alpha); });
}
dph_status dph_t2_star(double j, double alpha, double mean_interval, double* out) {
  return scalar(out, [&] { return dephase::t2_star(j, alpha, mean_interval); });
}
dph_status dph_t2b_star(double j, double t_b, double mean_interval, double* out) {
  return scalar(out, [&] { return dephase::t2b_star(j, t_b, mean_interval); });
}
dph_status dph_r_statistic(double decay_alpha, double decay_ref, double alpha, double* out) {
  return scalar(out, [&] { return dephase::r_statistic(decay_alpha, decay_ref, alpha); });
}
dph_status dph_four_case_phase(int parity_case, double eps0, double eps1, double t_b, double j, double* out) {
  return scalar(out, [&] { return dephase::four_case_phase(parity_case, eps0, eps1, t_b, j); });
}

dph_status dph_fit_exponential(const double* times, const double* magnitudes, size_t count, dph_fit* out) {
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    std::vector<dephase::CurvePoint> pts;
    if (count > 0) {
      need(times, "times");
      need(magnitudes, "magnitudes");
    }
    for (size_t k = 0; k < count; ++k) pts.push_back({times[k], magnitudes[k]});
    store_fit(dephase::fit_exponential(pts), out);
  });
}

// ---- transmission line

void dph_transmission_config_init(dph_transmission_config* cfg) {
  if (!cfg) return;
  const dephase::TransmissionConfig d;
  *cfg = dph_transmission_config{};
  cfg->trials = d.trials;
  cfg->group_size = d.group_size;
  cfg->remove_trivial_phase = d.remove_trivial_phase ? 1 : 0;
  cfg->train_start = DPH_TRAIN_AT_WINDOW;
}

dph_status dph_transmission_validate(const dph_transmission_config* cfg) {
  DPH_REQUIRE_NONNULL(cfg);
  return guarded([&] { dephase::validate(to_core(*cfg)); });
}

dph_status dph_transmission_pulse_count(double j, double t_b, size_t* out) {
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = dephase::default_pulse_count(j, t_b); });
}

dph_status dph_run_transmission(const dph_transmission_config* cfg, dph_ensemble* out) {
  DPH_REQUIRE_NONNULL(cfg);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = new dph_ensemble_s{dephase::run_transmission(to_core(*cfg))}; });
}

dph_status dph_transmission_schedule(const dph_transmission_config* cfg, double delta, double train_offset,
                                     dph_schedule* out) {
  DPH_REQUIRE_NONNULL(cfg);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto core = to_core(*cfg);
    dephase::validate(core);
    const auto sched = dephase::transmission_schedule(core, delta, train_offset);
    *out = new dph_schedule_s{sched.system().j(), sched.total_time(), sched.events()};
  });
}

void dph_ensemble_free(dph_ensemble e) { delete e; }
size_t dph_ensemble_trial_count(dph_ensemble e) { return e ? e->result.trials.size() : 0; }
size_t dph_ensemble_group_count(dph_ensemble e) { return e ? e->result.groups.size() : 0; }

dph_status dph_ensemble_trials(dph_ensemble e, dph_complex* out, size_t capacity) {
  DPH_REQUIRE_NONNULL(e);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto& v = e->result.trials;
    if (capacity < v.size()) throw dephase::Error(Errc::invalid_argument, "output buffer too small");
    for (size_t k = 0; k < v.size(); ++k) out[k] = to_c(v[k]);
  });
}

dph_status dph_ensemble_groups(dph_ensemble e, dph_complex* out, size_t capacity) {
  DPH_REQUIRE_NONNULL(e);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto& v = e->result.groups;
    if (capacity < v.size()) throw dephase::Error(Errc::invalid_argument, "output buffer too small");
    for (size_t k = 0; k < v.size(); ++k) out[k] = to_c(v[k]);
  });
}

dph_status dph_ensemble_grand(dph_ensemble e, dph_complex* out) {
  DPH_REQUIRE_NONNULL(e);
  DPH_REQUIRE_NONNULL(out);
  *out = to_c(e->result.grand);
  return DPH_OK;
}

dph_status dph_ensemble_write_csv(dph_ensemble e, const char* trials_path, const char* groups_path) {
  DPH_REQUIRE_NONNULL(e);
  return guarded([&] {
    if (trials_path) dephase::write_trials_csv(e->result, trials_path);
    if (groups_path) dephase::write_groups_csv(e->result, groups_path);
  });
}

// ---- quantum memory

void dph_memory_config_init(dph_memory_config* cfg) {
  if (!cfg) return;
  const dephase::MemoryConfig d;
  *cfg = dph_memory_config{};
  cfg->trials = d.trials;
  cfg->readout = DPH_READOUT_FLIP_ALIGNED;
  cfg->max_rejections = d.max_rejections;
}

dph_status dph_memory_validate(const dph_memory_config* cfg) {
  DPH_REQUIRE_NONNULL(cfg);
  return guarded([&] { dephase::validate(to_core(*cfg)); });
}

dph_status dph_run_memory(const dph_memory_config* cfg, dph_curve* out) {
  DPH_REQUIRE_NONNULL(cfg);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = new dph_curve_s{dephase::run_memory(to_core(*cfg))}; });
}

dph_status dph_curve_from_points(const double* times, const double* magnitudes, size_t count, dph_curve* out) {
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    dephase::MemoryResult r;
    if (count > 0) {
      need(times, "times");
      need(magnitudes, "magnitudes");
    }
    std::size_t above = 0;
    for (size_t k = 0; k < count; ++k) {
      r.curve.points.push_back({times[k], magnitudes[k]});
      r.mean_amplitudes.push_back(Complex(magnitudes[k], 0.0));
      if (magnitudes[k] > dephase::kFitFloor) ++above;
    }
    if (above >= 3) r.curve.fit = dephase::fit_exponential(r.curve.points);
    *out = new dph_curve_s{std::move(r)};
  });
}

void dph_curve_free(dph_curve c) { delete c; }
size_t dph_curve_point_count(dph_curve c) { return c ? c->result.curve.points.size() : 0; }

dph_status dph_curve_points(dph_curve c, double* times, double* magnitudes, size_t capacity) {
  DPH_REQUIRE_NONNULL(c);
  return guarded([&] {
    const auto& pts = c->result.curve.points;
    if (capacity < pts.size()) throw dephase::Error(Errc::invalid_argument, "output buffer too small");
    for (size_t k = 0; k < pts.size(); ++k) {
      if (times) times[k] = pts[k].time;
      if (magnitudes) magnitudes[k] = pts[k].magnitude;
    }
  });
}

dph_status dph_curve_mean_amplitudes(dph_curve c, dph_complex* out, size_t capacity) {
  DPH_REQUIRE_NONNULL(c);
  DPH_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto& v = c->result.mean_amplitudes;
    if (capacity < v.size()) throw dephase::Error(Errc::invalid_argument, "output buffer too small");
    for (size_t k = 0; k < v.size(); ++k) out[k] = to_c(v[k]);
  });
}

dph_status dph_curve_fit(dph_curve c, dph_fit* out) {
  DPH_REQUIRE_NONNULL(c);
  DPH_REQUIRE_NONNULL(out);
  if (!c->result.curve.fit) return set_error(DPH_ERR_INVALID_STATE, "curve has too few points above the fit floor");
  store_fit(*c->result.curve.fit, out);
  g_last_error.clear();
  return DPH_OK;
}

size_t dph_curve_warning_count(dph_curve c) { return c ? c->result.warnings.size() : 0; }

const char* dph_curve_warning(dph_curve c, size_t index) {
  if (!c || index >= c->result.warnings.size()) return nullptr;
  return c->result.warnings[index].c_str();
}

dph_status dph_curve_write_csv(dph_curve c, const char* path) {
  DPH_REQUIRE_NONNULL(c);
  DPH_REQUIRE_NONNULL(path);
  return guarded([&] { dephase::write_curve_csv(c->result.curve, path); });
}

}  // extern "C"
