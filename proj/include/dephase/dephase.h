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

#ifndef DEPHASE_DEPHASE_H_
#define DEPHASE_DEPHASE_H_

/*
 * C interface to the dephase simulator: two-qubit engineered phase
 * decoherence with bang-bang control.
 *
 * Matrices are passed as row-major arrays of dph_complex: 4 entries for a
 * 2x2 (one qubit) and 16 for a 4x4 (qubit 1 (x) qubit 2, qubit 1 is the left
 * factor). Times are in seconds, J and angular frequencies in rad/s.
 *
 * Every fallible call returns a dph_status; on failure a message is
 * available from dph_last_error() on the calling thread. Handles are opaque
 * and owned by the caller, who releases them with the matching *_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(DPH_BUILDING_LIBRARY)
#define DPH_API __attribute__((visibility("default")))
#else
#define DPH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dph_status {
  DPH_OK = 0,
  DPH_ERR_NULL_ARGUMENT = 1,
  DPH_ERR_INVALID_ARGUMENT = 2,
  DPH_ERR_DIMENSION = 3,
  DPH_ERR_NOT_UNITARY = 4,
  DPH_ERR_INVALID_STATE = 5,
  DPH_ERR_COMPLETENESS = 6,
  DPH_ERR_SIMULATION = 7,
  DPH_ERR_IO = 8,
  DPH_ERR_INTERNAL = 9
} dph_status;

typedef struct dph_complex {
  double re;
  double im;
} dph_complex;

DPH_API const char* dph_version(void);
DPH_API const char* dph_status_string(dph_status status);
/* Message for the last failed call on this thread ("" if none). */
DPH_API const char* dph_last_error(void);

/* ---- linear algebra ---------------------------------------------------- */

DPH_API dph_status dph_tensor(const dph_complex a[4], const dph_complex b[4], dph_complex out[16]);
DPH_API dph_status dph_partial_trace_env(const dph_complex m[16], dph_complex out[4]);
/* dim is 2 or 4; anything else is DPH_ERR_DIMENSION. */
DPH_API dph_status dph_matmul(const dph_complex* a, const dph_complex* b, int dim, dph_complex* out);
DPH_API dph_status dph_adjoint(const dph_complex* m, int dim, dph_complex* out);
DPH_API dph_status dph_is_unitary(const dph_complex* m, int dim, double tol, int* result);
DPH_API dph_status dph_is_density(const dph_complex* m, int dim, double tol, int* result);
/* bloch[3] = (a_x, a_y, a_z). */
DPH_API dph_status dph_bloch_from_density(const dph_complex rho[4], double bloch[3]);
DPH_API dph_status dph_density_from_bloch(const double bloch[3], dph_complex rho[4]);
/* value = a_x + i a_y = 2 rho_10, phase = arg(value). Either output may be NULL. */
DPH_API dph_status dph_amplitude(const dph_complex rho[4], dph_complex* value, double* phase);

/* ---- channels ---------------------------------------------------------- */

typedef struct dph_channel_s* dph_channel;

DPH_API dph_status dph_channel_phase_flip(double p, dph_channel* out);
DPH_API dph_status dph_channel_from_environment(const dph_complex u[16], const dph_complex rho_env[4],
                                                dph_channel* out);
/* unitaries holds count consecutive 2x2 matrices. */
DPH_API dph_status dph_channel_from_mixing(const dph_complex* unitaries, const double* probabilities,
                                           size_t count, dph_channel* out);
/* Builds a channel from explicit Kraus operators; fails unless complete. */
DPH_API dph_status dph_channel_from_kraus(const dph_complex* operators, size_t count, dph_channel* out);
DPH_API void dph_channel_free(dph_channel ch);
DPH_API size_t dph_channel_kraus_count(dph_channel ch);
DPH_API dph_status dph_channel_kraus(dph_channel ch, size_t index, dph_complex out[4]);
DPH_API dph_status dph_channel_apply(dph_channel ch, const dph_complex rho[4], dph_complex out[4]);
DPH_API dph_status dph_channels_equal(dph_channel a, dph_channel b, double tol, int* equal);

typedef enum dph_phase_family {
  DPH_PHASE_UNIFORM = 0,  /* theta uniform on [0, 2 pi); parameters unused */
  DPH_PHASE_GAUSSIAN = 1, /* mean 0, stddev = param */
  DPH_PHASE_TWO_POINT = 2 /* +param with probability q, -param otherwise */
} dph_phase_family;

/* <exp(i theta)>; an unknown family is DPH_ERR_INVALID_ARGUMENT. */
DPH_API dph_status dph_phase_average_factor(int family, double param, double q, dph_complex* out);

/* ---- pulses ------------------------------------------------------------ */

typedef enum dph_axis { DPH_AXIS_X = 0, DPH_AXIS_MINUS_X = 1, DPH_AXIS_Y = 2, DPH_AXIS_MINUS_Y = 3 } dph_axis;

DPH_API dph_status dph_phase_shift(double theta, dph_complex out[4]);
DPH_API dph_status dph_rotation_pulse(int axis, double angle, dph_complex out[4]);
DPH_API dph_status dph_conditional_evolution(double j, double tau, int env_state, dph_complex out[4]);
/* First n axes of the 8-step cycle (x, -x, y, -y, -x, x, -y, y). */
DPH_API dph_status dph_cyclic_axes(size_t n, int* out);
DPH_API dph_status dph_verify_rotating_frame(double omega_01, double omega_02, double j, double t, double dt,
                                             double* residual);
/* Frobenius norm of the lab-frame Hamiltonian used by the rotating-frame check. */
DPH_API dph_status dph_lab_frame_norm(double omega_01, double omega_02, double j, double* out);

typedef struct dph_schedule_s* dph_schedule;

DPH_API dph_status dph_schedule_create(double j, double total_time, dph_schedule* out);
/* target: 1 (system) or 2 (environment). */
DPH_API dph_status dph_schedule_add_pulse(dph_schedule s, double time, int target, int axis, double angle);
DPH_API void dph_schedule_free(dph_schedule s);
DPH_API size_t dph_schedule_event_count(dph_schedule s);
DPH_API dph_status dph_schedule_simulate(dph_schedule s, const dph_complex rho0[16], dph_complex out[16]);
/* JSON document {"J", "total_time", "events": [{"time", "target", "axis", "angle"}]}.
 * The returned string is released with dph_string_free. */
DPH_API dph_status dph_schedule_to_json(dph_schedule s, char** json);
DPH_API dph_status dph_schedule_from_json(const char* json, dph_schedule* out);
DPH_API void dph_string_free(char* s);

/* ---- closed-form laws -------------------------------------------------- */

DPH_API dph_status dph_kappa(double j, double t_b, double* out);
DPH_API dph_status dph_kappa_fixed_start(double j, double t_b, double* out);
DPH_API dph_status dph_lambda_factor(double j, double mean_interval, double alpha, double* out);
DPH_API dph_status dph_t2_star(double j, double alpha, double mean_interval, double* out);
/* +infinity when J t_b < 1e-8. */
DPH_API dph_status dph_t2b_star(double j, double t_b, double mean_interval, double* out);
DPH_API dph_status dph_r_statistic(double decay_alpha, double decay_ref, double alpha, double* out);
DPH_API dph_status dph_four_case_phase(int parity_case, double eps0, double eps1, double t_b, double j,
                                       double* out);

typedef struct dph_fit {
  double t2; /* +infinity when decays == 0 */
  double slope;
  double intercept;
  double rms_residual;
  double r_squared;
  size_t points_used;
  int decays;
} dph_fit;

/* Least squares on (t, ln m) using points with m > 0.02. */
DPH_API dph_status dph_fit_exponential(const double* times, const double* magnitudes, size_t count, dph_fit* out);

/* ---- transmission line ------------------------------------------------- */

typedef enum dph_train_start { DPH_TRAIN_AT_WINDOW = 0, DPH_TRAIN_RANDOM_PHASE = 1 } dph_train_start;

typedef struct dph_transmission_config {
  double j;
  double total_time;
  double t1;
  int bang_bang;
  double t_b;
  size_t pulses_per_trial; /* 0: smallest multiple of 8 covering the window */
  int train_start;         /* dph_train_start */
  size_t trials;
  size_t group_size;
  uint64_t seed;
  int remove_trivial_phase;
  unsigned threads; /* 0: hardware concurrency */
} dph_transmission_config;

typedef struct dph_ensemble_s* dph_ensemble;

DPH_API void dph_transmission_config_init(dph_transmission_config* cfg);
DPH_API dph_status dph_transmission_validate(const dph_transmission_config* cfg);
DPH_API dph_status dph_transmission_pulse_count(double j, double t_b, size_t* out);
DPH_API dph_status dph_run_transmission(const dph_transmission_config* cfg, dph_ensemble* out);
/* Schedule of one trial with the given window length and train offset. */
DPH_API dph_status dph_transmission_schedule(const dph_transmission_config* cfg, double delta, double train_offset,
                                             dph_schedule* out);
DPH_API void dph_ensemble_free(dph_ensemble e);
DPH_API size_t dph_ensemble_trial_count(dph_ensemble e);
DPH_API size_t dph_ensemble_group_count(dph_ensemble e);
DPH_API dph_status dph_ensemble_trials(dph_ensemble e, dph_complex* out, size_t capacity);
DPH_API dph_status dph_ensemble_groups(dph_ensemble e, dph_complex* out, size_t capacity);
DPH_API dph_status dph_ensemble_grand(dph_ensemble e, dph_complex* out);
DPH_API dph_status dph_ensemble_write_csv(dph_ensemble e, const char* trials_path, const char* groups_path);

/* ---- quantum memory ---------------------------------------------------- */

typedef enum dph_readout { DPH_READOUT_FLIP_ALIGNED = 0, DPH_READOUT_FIXED_TIME = 1 } dph_readout;

typedef struct dph_memory_config {
  double j;
  double mean_interval;
  double alpha;
  const double* observation_times; /* borrowed for the duration of the call */
  size_t observation_count;
  size_t trials;
  int bang_bang;
  double t_b;
  uint64_t seed;
  int readout; /* dph_readout */
  int max_rejections;
  unsigned threads;
} dph_memory_config;

typedef struct dph_curve_s* dph_curve;

DPH_API void dph_memory_config_init(dph_memory_config* cfg);
DPH_API dph_status dph_memory_validate(const dph_memory_config* cfg);
DPH_API dph_status dph_run_memory(const dph_memory_config* cfg, dph_curve* out);
/* A curve from explicit points (count may be 0); fitted when possible. */
DPH_API dph_status dph_curve_from_points(const double* times, const double* magnitudes, size_t count,
                                         dph_curve* out);
DPH_API void dph_curve_free(dph_curve c);
DPH_API size_t dph_curve_point_count(dph_curve c);
DPH_API dph_status dph_curve_points(dph_curve c, double* times, double* magnitudes, size_t capacity);
DPH_API dph_status dph_curve_mean_amplitudes(dph_curve c, dph_complex* out, size_t capacity);
/* DPH_ERR_INVALID_STATE when the curve has too few points above the floor. */
DPH_API dph_status dph_curve_fit(dph_curve c, dph_fit* out);
DPH_API size_t dph_curve_warning_count(dph_curve c);
DPH_API const char* dph_curve_warning(dph_curve c, size_t index);
/* Columns time_s,magnitude,fit_magnitude; 12 significant digits. */
DPH_API dph_status dph_curve_write_csv(dph_curve c, const char* path);

#ifdef __cplusplus
}
#endif

#endif  // DEPHASE_DEPHASE_H_
