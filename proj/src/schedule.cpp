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

#include "twoq/schedule.hpp"

#include <cmath>
#include <sstream>

#include "twoq/hamiltonian.hpp"

namespace twoq {

namespace {

constexpr double kZeroAngle = 1e-12;

void check_regime(double coupling_j, double pulse_strength_n) {
  if (!(coupling_j > 0.0) || !std::isfinite(coupling_j)) {
    throw Error(ErrorCode::NonPositiveCoupling, "coupling J must be positive");
  }
  if (!(pulse_strength_n >= 10.0 * coupling_j) || !std::isfinite(pulse_strength_n)) {
    std::ostringstream msg;
    msg << "pulse strength N = " << pulse_strength_n
        << " is outside the hard-pulse regime N >= 10 J = " << 10.0 * coupling_j;
    throw Error(ErrorCode::HardPulseRegimeViolated, msg.str());
  }
}

struct LocalPair {
  Matrix2 q1 = Matrix2::Identity();
  Matrix2 q2 = Matrix2::Identity();

  LocalPair operator*(const LocalPair &o) const { return {q1 * o.q1, q2 * o.q2}; }
  LocalPair adjoint() const { return {q1.adjoint(), q2.adjoint()}; }
};

Matrix2 to_su2(const Matrix2 &m) { return m / std::sqrt(det2(m)); }

// Appends the Euler pulses of both qubits, driving them simultaneously.
void emit_local(const LocalPair &l, double n, std::vector<PulseSegment> &out) {
  const EulerXYX e1 = euler_xyx(to_su2(l.q1));
  const EulerXYX e2 = euler_xyx(to_su2(l.q2));
  // Time order: Rx(delta), Ry(beta), Rx(alpha).
  const std::array<std::array<double, 2>, 3> slots{
      {{e1.delta, e2.delta}, {e1.beta, e2.beta}, {e1.alpha, e2.alpha}}};
  for (int s = 0; s < 3; ++s) {
    const double a1 = std::abs(slots[s][0]) > kZeroAngle ? slots[s][0] : 0.0;
    const double a2 = std::abs(slots[s][1]) > kZeroAngle ? slots[s][1] : 0.0;
    if (a1 == 0.0 && a2 == 0.0) continue;
    const double duration = std::max(std::abs(a1), std::abs(a2)) / (kPi * n);
    // Amplitude v rotates by 2 pi v t.
    const double v1 = a1 / (2 * kPi * duration);
    const double v2 = a2 / (2 * kPi * duration);
    PulseSegment seg;
    seg.duration = duration;
    if (s == 1) {
      seg.amplitudes = {0, v1, 0, v2};
    } else {
      seg.amplitudes = {v1, 0, v2, 0};
    }
    out.push_back(seg);
  }
}

// Evolution with the drift switched off during control segments.
Unitary4 ideal_evolution(const Schedule &s) {
  const HamiltonianModel model(s.coupling_j);
  Matrix4 u = Matrix4::Identity();
  for (const auto &seg : s.segments) {
    const bool drift = seg.amplitudes.is_zero();
    u = expm_hermitian(model.hamiltonian(seg.amplitudes.as_array(), drift), seg.duration)
            .matrix() *
        u;
  }
  return Unitary4::trusted(u);
}

double relative_phase(const Unitary4 &target, const Unitary4 &u) {
  return std::arg((target.matrix().adjoint() * u.matrix()).trace());
}

}  // namespace

double Schedule::wall_time() const {
  double t = 0;
  for (const auto &s : segments) t += s.duration;
  return t;
}

double Schedule::drift_time() const {
  double t = 0;
  for (const auto &s : segments) {
    if (s.amplitudes.is_zero()) t += s.duration;
  }
  return t;
}

void validate(const Schedule &s) {
  if (!(s.coupling_j > 0.0) || !std::isfinite(s.coupling_j)) {
    throw Error(ErrorCode::NonPositiveCoupling, "coupling J must be positive");
  }
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto &seg = s.segments[i];
    bool finite = std::isfinite(seg.duration);
    for (double v : seg.amplitudes.as_array()) finite = finite && std::isfinite(v);
    if (!finite || !(seg.duration > 0.0)) {
      std::ostringstream msg;
      msg << "segment " << i << " must have a positive finite duration and finite amplitudes";
      throw Error(ErrorCode::InvalidArgument, msg.str());
    }
  }
  const double drift = s.drift_time();
  if (std::abs(drift - s.declared_drift_time) > 1e-12 * std::max(1.0, drift)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "declared drift time " << s.declared_drift_time
        << " does not match the drift segments (" << drift << ")";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

EulerXYX euler_xyx(const Matrix2 &k) {
  // Hadamard conjugation turns Rx into Rz and Ry(b) into Ry(-b):
  // H k H = Rz(alpha) Ry(-beta) Rz(delta), decomposed as ZYZ.
  const double s = 1.0 / std::sqrt(2.0);
  const Matrix2 h = (Matrix2() << s, s, s, -s).finished();
  const Matrix2 kz = h * k * h;

  constexpr double eps = 1e-12;
  const double c = std::abs(kz(0, 0));
  const double sn = std::abs(kz(1, 0));
  const double b = 2 * std::atan2(sn, c);
  double alpha = 0, delta = 0;
  if (sn < eps) {
    alpha = -2 * std::arg(kz(0, 0));
  } else if (c < eps) {
    alpha = 2 * std::arg(kz(1, 0));
  } else {
    const double sum = -2 * std::arg(kz(0, 0));
    const double diff = 2 * std::arg(kz(1, 0));
    alpha = (sum + diff) / 2;
    delta = (sum - diff) / 2;
  }

  // (alpha, b, delta) and (alpha + pi, -b, delta - pi) are the same rotation;
  // keep the one with the smaller outer angles.
  const EulerXYX first{wrap_angle(alpha), -b, wrap_angle(delta)};
  if (sn < eps || c < eps) return first;
  const EulerXYX second{wrap_angle(alpha + kPi), b, wrap_angle(delta - kPi)};
  const double cost1 = std::abs(first.alpha) + std::abs(first.delta);
  const double cost2 = std::abs(second.alpha) + std::abs(second.delta);
  return cost2 + 1e-12 < cost1 ? second : first;
}

Schedule cnot_schedule(double coupling_j, double pulse_strength_n) {
  check_regime(coupling_j, pulse_strength_n);
  const double n = pulse_strength_n;
  const double hard = 1.0 / n;
  Schedule s;
  s.coupling_j = coupling_j;
  s.pulse_strength_n = n;
  s.target = gate::Cnot{};
  s.segments = {
      {hard, {0, -n / 2, 0, -n / 4}},
      {1.0 / (2.0 * coupling_j), {0, 0, 0, 0}},
      {hard, {0, n / 4, 0, n / 4}},
      {hard, {-n / 4, 0, n / 4, 0}},
      {hard, {0, n / 4, 0, 0}},
  };
  s.declared_drift_time = 1.0 / (2.0 * coupling_j);
  s.expected_global_phase = -kPi / 4;
  return s;
}

Schedule synthesize(const GateSpec &spec, double coupling_j, double pulse_strength_n) {
  check_regime(coupling_j, pulse_strength_n);
  if (std::holds_alternative<gate::Cnot>(spec)) {
    return cnot_schedule(coupling_j, pulse_strength_n);
  }

  const Unitary4 u = gate_matrix(spec);
  const KakDecomposition kak = kak_decompose(u);
  // Drift lengths come from the invariant pipeline so the total equals the
  // minimal time exactly; the decomposition supplies the local frames.
  const CanonicalCoordinates c = canonical_coords(u);

  // u ~ K1 Ex Ey Ez K2 with
  //   Ex = W F D(c1) F W^dagger,  W = Ry(pi/2) (x) Ry(pi/2)  maps ZZ -> XX
  //   Ey = V F D(c2) F V^dagger,  V = Rx(-pi/2) (x) Rx(-pi/2) maps ZZ -> YY
  //   Ez = Fz D(c3) Fz
  // where D(c) = exp(-i c/2 ZZ) is free drift for c/(pi J), F = 1 (x) sx flips
  // the sign of ZZ, and Fz = F unless the ZZ term is already negative.
  const LocalPair k1{kak.k1.a, kak.k1.b};
  const LocalPair k2{kak.k2.a, kak.k2.b};
  const LocalPair f{pauli::I(), rx(kPi)};
  const LocalPair fz = kak.zz_sign > 0 ? f : LocalPair{};
  const LocalPair w{ry(kPi / 2), ry(kPi / 2)};
  const LocalPair v{rx(-kPi / 2), rx(-kPi / 2)};

  const std::array<LocalPair, 4> blocks{fz * k2, f * v.adjoint() * fz,
                                        f * w.adjoint() * v * f, k1 * w * f};
  const std::array<double, 3> angles{c.c3, c.c2, c.c1};

  Schedule s;
  s.coupling_j = coupling_j;
  s.pulse_strength_n = pulse_strength_n;
  s.target = spec;
  LocalPair pending = blocks[0];
  for (int i = 0; i < 3; ++i) {
    if (angles[i] > 0.0) {
      emit_local(pending, pulse_strength_n, s.segments);
      s.segments.push_back({angles[i] / (kPi * coupling_j), {}});
      pending = blocks[i + 1];
    } else {
      pending = blocks[i + 1] * pending;
    }
  }
  emit_local(pending, pulse_strength_n, s.segments);
  s.declared_drift_time = s.drift_time();
  s.expected_global_phase = relative_phase(u, ideal_evolution(s));
  return s;
}

}  // namespace twoq
