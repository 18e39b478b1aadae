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

// Exact propagation of piecewise-constant schedules. Each segment is
// exponentiated in closed form with the drift always on, so the only
// deviation from the target gate is the physical finite-N error.

#include <utility>
#include <vector>

#include "twoq/hamiltonian.hpp"
#include "twoq/schedule.hpp"

namespace twoq {

struct SimulationReport {
  Unitary4 u_final = Unitary4::identity();
  double fidelity = 0;
  double relative_phase = 0;  // arg tr(target^dagger u_final)
  double wall_time = 0;
  double drift_time = 0;
};

/// Time-ordered product of exp(-i dt (H_d + sum v_i H_i)) over the segments.
Unitary4 evolve(const Schedule &s);

/// |tr(u^dagger v)| / 4
double fidelity(const Unitary4 &u, const Unitary4 &v);

SimulationReport verify(const Schedule &s, const Unitary4 &target);

/// Verifies independent (schedule, target) pairs concurrently. Results are
/// returned in input order.
std::vector<SimulationReport> verify_batch(
    const std::vector<std::pair<Schedule, Unitary4>> &jobs);

}  // namespace twoq
