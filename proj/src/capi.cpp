// Copyright 2026 The twoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twoq/twoq.h"

#include <cmath>
#include <cstring>
#include <string>

#include "twoq/kak.hpp"
#include "twoq/schedule_io.hpp"
#include "twoq/simulate.hpp"

struct twoq_gate {
  twoq::GateSpec spec;
  twoq::Unitary4 unitary;
  std::string name;
};

struct twoq_schedule {
  twoq::Schedule schedule;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

twoq_status to_status(twoq::ErrorCode code) {
  using twoq::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return TWOQ_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotUnitary: return TWOQ_ERR_NOT_UNITARY;
    case ErrorCode::NonHermitian: return TWOQ_ERR_NON_HERMITIAN;
    case ErrorCode::NonRealG2: return TWOQ_ERR_NON_REAL_G2;
    case ErrorCode::PositiveDiscriminant: return TWOQ_ERR_POSITIVE_DISCRIMINANT;
    case ErrorCode::ResidualTooLarge: return TWOQ_ERR_RESIDUAL_TOO_LARGE;
    case ErrorCode::NotLocal: return TWOQ_ERR_NOT_LOCAL;
    case ErrorCode::ReconstructionFailed: return TWOQ_ERR_RECONSTRUCTION_FAILED;
    case ErrorCode::HardPulseRegimeViolated: return TWOQ_ERR_HARD_PULSE_REGIME;
    case ErrorCode::NonPositiveCoupling: return TWOQ_ERR_NON_POSITIVE_COUPLING;
    case ErrorCode::ParseError: return TWOQ_ERR_PARSE;
    case ErrorCode::IoError: return TWOQ_ERR_IO;
  }
  return TWOQ_ERR_INTERNAL;
}

twoq_status fail(twoq_status status, const std::string &msg) {
  g_last_error = msg;
  return status;
}

template <class F>
twoq_status guarded(F &&body) {
  try {
    body();
    return TWOQ_OK;
  } catch (const twoq::Error &e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::exception &e) {
    return fail(TWOQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TWOQ_ERR_INTERNAL, "unknown error");
  }
}

twoq_status null_argument() { return fail(TWOQ_ERR_INVALID_ARGUMENT, "null argument"); }

twoq_status make_gate(twoq::GateSpec spec, twoq_gate **out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    twoq::Unitary4 u = twoq::gate_matrix(spec);
    std::string name = twoq::gate_name(spec);
    *out = new twoq_gate{std::move(spec), u, std::move(name)};
  });
}

void split(const twoq::Matrix4 &m, double re[16], double im[16]) {
  for (int i = 0; i < 16; ++i) {
    re[i] = m(i / 4, i % 4).real();
    im[i] = m(i / 4, i % 4).imag();
  }
}

void split2(const twoq::Matrix2 &m, double re[4], double im[4]) {
  for (int i = 0; i < 4; ++i) {
    re[i] = m(i / 2, i % 2).real();
    im[i] = m(i / 2, i % 2).imag();
  }
}

void fill_invariants(const twoq::LocalInvariants &inv, const twoq::ABCTriple &abc,
                     twoq_invariants *out) {
  *out = {inv.g1.real(), inv.g1.imag(), inv.g2.real(), inv.g2.imag(),
          abc.a, abc.b, abc.c};
}

twoq_coords to_c(const twoq::CanonicalCoordinates &c) { return {c.c1, c.c2, c.c3}; }

void fill_local(const twoq::LocalGate &g, twoq_local_gate *out) {
  split2(g.a, out->a_re, out->a_im);
  split2(g.b, out->b_re, out->b_im);
  out->phase = g.phase;
}

void fill_report(const twoq::SimulationReport &r, twoq_sim_report *out) {
  split(r.u_final.matrix(), out->u_re, out->u_im);
  out->fidelity = r.fidelity;
  out->relative_phase = r.relative_phase;
  out->wall_time_s = r.wall_time;
  out->drift_time_s = r.drift_time;
}

}  // namespace

extern "C" {

const char *twoq_status_string(twoq_status status) {
  switch (status) {
    case TWOQ_OK: return "ok";
    case TWOQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TWOQ_ERR_NOT_UNITARY: return "not unitary";
    case TWOQ_ERR_NON_HERMITIAN: return "not Hermitian";
    case TWOQ_ERR_NON_REAL_G2: return "G2 not real";
    case TWOQ_ERR_POSITIVE_DISCRIMINANT: return "positive discriminant";
    case TWOQ_ERR_RESIDUAL_TOO_LARGE: return "root residual too large";
    case TWOQ_ERR_NOT_LOCAL: return "not a local gate";
    case TWOQ_ERR_RECONSTRUCTION_FAILED: return "reconstruction failed";
    case TWOQ_ERR_HARD_PULSE_REGIME: return "hard-pulse regime violated";
    case TWOQ_ERR_NON_POSITIVE_COUPLING: return "non-positive coupling";
    case TWOQ_ERR_PARSE: return "parse error";
    case TWOQ_ERR_IO: return "i/o error";
    case TWOQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char *twoq_last_error(void) { return g_last_error.c_str(); }

const char *twoq_version(void) { return "0.1.0"; }

twoq_status twoq_set_tolerance_scale(double scale) {
  return guarded([&] { twoq::set_tolerance_scale(scale); });
}

twoq_status twoq_gate_cnot(twoq_gate **out) { return make_gate(twoq::gate::Cnot{}, out); }

twoq_status twoq_gate_swap(twoq_gate **out) { return make_gate(twoq::gate::Swap{}, out); }

twoq_status twoq_gate_sqrtswap(twoq_gate **out) {
  return make_gate(twoq::gate::SqrtSwap{}, out);
}

twoq_status twoq_gate_controlled_u(double gamma1, double gamma2, double gamma3,
                                   twoq_gate **out) {
  if (!std::isfinite(gamma1) || !std::isfinite(gamma2) || !std::isfinite(gamma3)) {
    return fail(TWOQ_ERR_INVALID_ARGUMENT, "controlled-U angles must be finite");
  }
  return make_gate(twoq::gate::ControlledU{gamma1, gamma2, gamma3}, out);
}

twoq_status twoq_gate_from_matrix(const double re[16], const double im[16], double tol,
                                  twoq_gate **out) {
  if (re == nullptr || im == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    twoq::Matrix4 m;
    for (int i = 0; i < 16; ++i) m(i / 4, i % 4) = twoq::Complex(re[i], im[i]);
    const double t = tol > 0 ? tol : twoq::tolerances().user_unitary;
    twoq::GateSpec spec = twoq::gate::Custom{twoq::Unitary4(m, t)};
    *out = new twoq_gate{spec, twoq::gate_matrix(spec), "custom"};
  });
}

twoq_status twoq_gate_load_matrix(const char *path, double tol, twoq_gate **out) {
  if (path == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const double t = tol > 0 ? tol : twoq::tolerances().user_unitary;
    twoq::GateSpec spec = twoq::gate::Custom{twoq::read_matrix_file(path, t)};
    *out = new twoq_gate{spec, twoq::gate_matrix(spec), "custom"};
  });
}

void twoq_gate_free(twoq_gate *gate) { delete gate; }

twoq_status twoq_gate_matrix(const twoq_gate *gate, double re[16], double im[16]) {
  if (gate == nullptr || re == nullptr || im == nullptr) return null_argument();
  split(gate->unitary.matrix(), re, im);
  return TWOQ_OK;
}

const char *twoq_gate_name(const twoq_gate *gate) {
  return gate == nullptr ? "" : gate->name.c_str();
}

twoq_status twoq_local_invariants(const twoq_gate *gate, twoq_invariants *out) {
  if (gate == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto inv = twoq::local_invariants(gate->unitary);
    fill_invariants(inv, twoq::abc_from_invariants(inv), out);
  });
}

twoq_status twoq_canonical_coords(const twoq_gate *gate, twoq_coords *out) {
  if (gate == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = to_c(twoq::canonical_coords(gate->unitary)); });
}

twoq_status twoq_min_time(const twoq_gate *gate, double coupling_j_hz,
                          twoq_mintime_report *out) {
  if (gate == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto rep = twoq::min_time(gate->unitary, coupling_j_hz);
    out->coords = to_c(rep.coords);
    out->t_star_s = rep.t_star;
    out->coupling_j_hz = rep.coupling_j;
    fill_invariants(rep.invariants, rep.abc, &out->invariants);
    out->p = rep.cubic.source.p;
    out->q = rep.cubic.source.q;
    out->r = rep.cubic.source.r;
    out->P = rep.cubic.P;
    out->Q = rep.cubic.Q;
    out->discriminant = rep.cubic.discriminant;
    for (int k = 0; k < 3; ++k) {
      out->roots_x[k] = rep.roots.x[k];
      out->roots_X[k] = rep.roots.X[k];
    }
  });
}

twoq_status twoq_kak_decompose(const twoq_gate *gate, twoq_kak *out) {
  if (gate == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto d = twoq::kak_decompose(gate->unitary);
    fill_local(d.k1, &out->k1);
    fill_local(d.k2, &out->k2);
    out->coords = to_c(d.coords);
    out->zz_sign = d.zz_sign;
    out->global_phase = d.global_phase;
    out->residual = twoq::max_abs(
        twoq::Matrix4(twoq::reconstruct(d).matrix() - gate->unitary.matrix()));
  });
}

twoq_status twoq_schedule_synthesize(const twoq_gate *gate, double coupling_j_hz,
                                     double pulse_strength_n, twoq_schedule **out) {
  if (gate == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new twoq_schedule{twoq::synthesize(gate->spec, coupling_j_hz, pulse_strength_n), {}};
  });
}

twoq_status twoq_schedule_load(const char *path, twoq_schedule **out) {
  if (path == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = new twoq_schedule{twoq::read_schedule_file(path), {}}; });
}

twoq_status twoq_schedule_parse(const char *text, twoq_schedule **out) {
  if (text == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = new twoq_schedule{twoq::schedule_from_string(text), {}}; });
}

twoq_status twoq_schedule_save(const twoq_schedule *schedule, const char *path) {
  if (schedule == nullptr || path == nullptr) return null_argument();
  return guarded([&] { twoq::write_schedule_file(path, schedule->schedule); });
}

const char *twoq_schedule_text(const twoq_schedule *schedule) {
  if (schedule == nullptr) return "";
  auto *self = const_cast<twoq_schedule *>(schedule);
  self->text = twoq::schedule_to_string(schedule->schedule);
  return self->text.c_str();
}

void twoq_schedule_free(twoq_schedule *schedule) { delete schedule; }

size_t twoq_schedule_segment_count(const twoq_schedule *schedule) {
  return schedule == nullptr ? 0 : schedule->schedule.segments.size();
}

twoq_status twoq_schedule_segment(const twoq_schedule *schedule, size_t index,
                                  double *duration_s, double v[4]) {
  if (schedule == nullptr || duration_s == nullptr || v == nullptr) return null_argument();
  if (index >= schedule->schedule.segments.size()) {
    return fail(TWOQ_ERR_INVALID_ARGUMENT, "segment index out of range");
  }
  const auto &seg = schedule->schedule.segments[index];
  *duration_s = seg.duration;
  const auto a = seg.amplitudes.as_array();
  std::memcpy(v, a.data(), sizeof(double) * 4);
  return TWOQ_OK;
}

double twoq_schedule_wall_time(const twoq_schedule *schedule) {
  return schedule == nullptr ? 0.0 : schedule->schedule.wall_time();
}

double twoq_schedule_drift_time(const twoq_schedule *schedule) {
  return schedule == nullptr ? 0.0 : schedule->schedule.declared_drift_time;
}

double twoq_schedule_coupling(const twoq_schedule *schedule) {
  return schedule == nullptr ? 0.0 : schedule->schedule.coupling_j;
}

double twoq_schedule_pulse_strength(const twoq_schedule *schedule) {
  return schedule == nullptr ? 0.0 : schedule->schedule.pulse_strength_n;
}

twoq_status twoq_schedule_target(const twoq_schedule *schedule, twoq_gate **out) {
  if (schedule == nullptr) return null_argument();
  return make_gate(schedule->schedule.target, out);
}

twoq_status twoq_simulate(const twoq_schedule *schedule, twoq_sim_report *out) {
  if (schedule == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto &s = schedule->schedule;
    fill_report(twoq::verify(s, twoq::gate_matrix(s.target)), out);
  });
}

twoq_status twoq_verify(const twoq_schedule *schedule, const twoq_gate *target,
                        twoq_sim_report *out) {
  if (schedule == nullptr || target == nullptr || out == nullptr) return null_argument();
  return guarded([&] { fill_report(twoq::verify(schedule->schedule, target->unitary), out); });
}

}  // extern "C"
