/*
 * Copyright 2026 The twoq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libtwoq: local invariants, canonical coordinates, minimal
 * implementation time, Cartan decomposition, hard-pulse schedule synthesis
 * and exact schedule simulation for two-qubit gates on a heteronuclear
 * two-spin system with ZZ coupling J.
 *
 * Matrices cross the boundary as two row-major arrays of 16 doubles (real
 * and imaginary parts). Gates and schedules are opaque handles owned by the
 * caller and released with the matching *_free function. Every fallible call
 * returns a twoq_status; on failure twoq_last_error() returns a message for
 * the calling thread that stays valid until the next failing call.
 */

#ifndef TWOQ_TWOQ_H
#define TWOQ_TWOQ_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(TWOQ_BUILDING_LIBRARY)
#    define TWOQ_API __declspec(dllexport)
#  else
#    define TWOQ_API __declspec(dllimport)
#  endif
#else
#  define TWOQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum twoq_status {
  TWOQ_OK = 0,
  TWOQ_ERR_INVALID_ARGUMENT = 1,
  TWOQ_ERR_NOT_UNITARY = 2,
  TWOQ_ERR_NON_HERMITIAN = 3,
  TWOQ_ERR_NON_REAL_G2 = 4,
  TWOQ_ERR_POSITIVE_DISCRIMINANT = 5,
  TWOQ_ERR_RESIDUAL_TOO_LARGE = 6,
  TWOQ_ERR_NOT_LOCAL = 7,
  TWOQ_ERR_RECONSTRUCTION_FAILED = 8,
  TWOQ_ERR_HARD_PULSE_REGIME = 9,
  TWOQ_ERR_NON_POSITIVE_COUPLING = 10,
  TWOQ_ERR_PARSE = 11,
  TWOQ_ERR_IO = 12,
  TWOQ_ERR_INTERNAL = 13
} twoq_status;

typedef struct twoq_gate twoq_gate;
typedef struct twoq_schedule twoq_schedule;

typedef struct twoq_invariants {
  double g1_re, g1_im;
  double g2_re, g2_im;
  double a, b, c;
} twoq_invariants;

typedef struct twoq_coords {
  double c1, c2, c3; /* radians, pi/2 >= c1 >= c2 >= c3 >= 0 */
} twoq_coords;

typedef struct twoq_mintime_report {
  twoq_coords coords;
  double t_star_s;
  double coupling_j_hz;
  twoq_invariants invariants;
  double p, q, r;          /* monic cubic in x = sin^2 c */
  double P, Q;             /* depressed cubic X^3 + P X + Q */
  double discriminant;     /* P^3/27 + Q^2/4 */
  double roots_x[3];       /* sin^2 c_i, descending */
  double roots_X[3];       /* depressed roots, same order */
} twoq_mintime_report;

typedef struct twoq_local_gate {
  double a_re[4], a_im[4]; /* qubit 1, SU(2), row-major */
  double b_re[4], b_im[4]; /* qubit 2, SU(2), row-major */
  double phase;
} twoq_local_gate;

/* U = e^{i global_phase} k1 exp(i/2 (c1 XX + c2 YY + zz_sign c3 ZZ)) k2 */
typedef struct twoq_kak {
  twoq_local_gate k1;
  twoq_coords coords;
  int zz_sign;
  twoq_local_gate k2;
  double global_phase;
  double residual; /* max-norm reconstruction error */
} twoq_kak;

typedef struct twoq_sim_report {
  double u_re[16], u_im[16];
  double fidelity;
  double relative_phase;
  double wall_time_s;
  double drift_time_s;
} twoq_sim_report;

/* Errors and global settings. */
TWOQ_API const char *twoq_status_string(twoq_status status);
TWOQ_API const char *twoq_last_error(void);
TWOQ_API const char *twoq_version(void);
/* Multiplies every internal tolerance. scale must be positive. */
TWOQ_API twoq_status twoq_set_tolerance_scale(double scale);

/* Gates. */
TWOQ_API twoq_status twoq_gate_cnot(twoq_gate **out);
TWOQ_API twoq_status twoq_gate_swap(twoq_gate **out);
TWOQ_API twoq_status twoq_gate_sqrtswap(twoq_gate **out);
TWOQ_API twoq_status twoq_gate_controlled_u(double gamma1, double gamma2, double gamma3,
                                            twoq_gate **out);
/* Unitarity is enforced within tol (tol <= 0 selects the default 1e-8). */
TWOQ_API twoq_status twoq_gate_from_matrix(const double re[16], const double im[16],
                                           double tol, twoq_gate **out);
TWOQ_API twoq_status twoq_gate_load_matrix(const char *path, double tol, twoq_gate **out);
TWOQ_API void twoq_gate_free(twoq_gate *gate);
TWOQ_API twoq_status twoq_gate_matrix(const twoq_gate *gate, double re[16], double im[16]);
/* "cnot", "swap", "sqrtswap", "cu" or "custom"; owned by the handle. */
TWOQ_API const char *twoq_gate_name(const twoq_gate *gate);

/* Analysis. */
TWOQ_API twoq_status twoq_local_invariants(const twoq_gate *gate, twoq_invariants *out);
TWOQ_API twoq_status twoq_canonical_coords(const twoq_gate *gate, twoq_coords *out);
TWOQ_API twoq_status twoq_min_time(const twoq_gate *gate, double coupling_j_hz,
                                   twoq_mintime_report *out);
TWOQ_API twoq_status twoq_kak_decompose(const twoq_gate *gate, twoq_kak *out);

/* Schedules. */
TWOQ_API twoq_status twoq_schedule_synthesize(const twoq_gate *gate, double coupling_j_hz,
                                              double pulse_strength_n,
                                              twoq_schedule **out);
TWOQ_API twoq_status twoq_schedule_load(const char *path, twoq_schedule **out);
TWOQ_API twoq_status twoq_schedule_parse(const char *text, twoq_schedule **out);
TWOQ_API twoq_status twoq_schedule_save(const twoq_schedule *schedule, const char *path);
/* Serialized document; owned by the handle, valid until the next call on it. */
TWOQ_API const char *twoq_schedule_text(const twoq_schedule *schedule);
TWOQ_API void twoq_schedule_free(twoq_schedule *schedule);
TWOQ_API size_t twoq_schedule_segment_count(const twoq_schedule *schedule);
TWOQ_API twoq_status twoq_schedule_segment(const twoq_schedule *schedule, size_t index,
                                           double *duration_s, double v[4]);
TWOQ_API double twoq_schedule_wall_time(const twoq_schedule *schedule);
TWOQ_API double twoq_schedule_drift_time(const twoq_schedule *schedule);
TWOQ_API double twoq_schedule_coupling(const twoq_schedule *schedule);
TWOQ_API double twoq_schedule_pulse_strength(const twoq_schedule *schedule);
/* New handle for the schedule's recorded target gate. */
TWOQ_API twoq_status twoq_schedule_target(const twoq_schedule *schedule, twoq_gate **out);

/* Simulation. */
TWOQ_API twoq_status twoq_simulate(const twoq_schedule *schedule, twoq_sim_report *out);
TWOQ_API twoq_status twoq_verify(const twoq_schedule *schedule, const twoq_gate *target,
                                 twoq_sim_report *out);

#ifdef __cplusplus
}
#endif

#endif /* TWOQ_TWOQ_H */
