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

#pragma once

// Hard-pulse control schedules.
//
// A schedule is an ordered list of piecewise-constant segments. During each
// segment the drift is on and the controls hold amplitudes v1..v4 on
// H1..H4. A constant amplitude v on H = v pi sigma for a time t rotates the
// addressed spin by 2 pi v t. Local rotations are emitted at amplitude N/2,
// so a rotation by theta lasts |theta| / (pi N).

#include <array>
#include <optional>
#include <vector>

#include "twoq/gates.hpp"
#include "twoq/kak.hpp"

namespace twoq {

struct ControlAmplitudes {
  double v1 = 0;
  double v2 = 0;
  double v3 = 0;
  double v4 = 0;

  std::array<double, 4> as_array() const { return {v1, v2, v3, v4}; }
  bool is_zero() const { return v1 == 0 && v2 == 0 && v3 == 0 && v4 == 0; }
};

struct PulseSegment {
  double duration = 0;  // seconds, > 0
  ControlAmplitudes amplitudes;
};

struct Schedule {
  std::vector<PulseSegment> segments;
  double coupling_j = 1;        // Hz
  double pulse_strength_n = 0;  // dimensionless N
  GateSpec target = gate::Cnot{};
  double declared_drift_time = 0;  // seconds
  /// Phase of the ideal (N -> infinity) evolution relative to the target.
  std::optional<double> expected_global_phase;

  double wall_time() const;
  /// Sum of durations of all-zero segments.
  double drift_time() const;
};

/// Checks segment durations and amplitudes are finite, durations positive and
/// declared_drift_time consistent with the segments. Throws
/// Error(InvalidArgument).
void validate(const Schedule &s);

struct EulerXYX {
  double alpha = 0;
  double beta = 0;
  double delta = 0;
};

/// k = Rx(alpha) Ry(beta) Rx(delta) up to global phase, R_m(t) = exp(-i t s_m/2).
/// alpha, delta in (-pi, pi], beta in [-pi, pi]. When beta is 0 or pi the
/// split between alpha and delta is not unique and delta = 0 is returned.
EulerXYX euler_xyx(const Matrix2 &k);

/// Five-segment CNOT schedule with a single free-drift segment of 1/(2J):
///   [0, 1/N]            v = (0, -N/2, 0, -N/4)
///   [.., + 1/(2J)]      drift only
///   [.., + 1/N]         v = (0, N/4, 0, N/4)
///   [.., + 1/N]         v = (-N/4, 0, N/4, 0)
///   [.., + 1/N]         v = (0, N/4, 0, 0)
/// Realizes e^{-i pi/4} CNOT as N -> infinity.
/// Throws Error(HardPulseRegimeViolated) unless N >= 10 J.
Schedule cnot_schedule(double coupling_j, double pulse_strength_n);

/// Time-optimal schedule for any gate: one drift segment of length c_i/(pi J)
/// per nonzero canonical coordinate, each conjugated into the required
/// XX/YY/ZZ axis (and sign) by hard local pulses. CNOT delegates to
/// cnot_schedule().
Schedule synthesize(const GateSpec &spec, double coupling_j, double pulse_strength_n);

}  // namespace twoq
