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

#include "twoq/simulate.hpp"

#include <cmath>
#include <future>

namespace twoq {

Unitary4 evolve(const Schedule &s) {
  if (s.segments.empty()) return Unitary4::identity();
  const HamiltonianModel model(s.coupling_j);
  Unitary4 u = Unitary4::identity();
  for (const auto &seg : s.segments) {
    u = expm_hermitian(model.hamiltonian(seg.amplitudes.as_array()), seg.duration) * u;
  }
  return u;
}

double fidelity(const Unitary4 &u, const Unitary4 &v) {
  return std::abs((u.matrix().adjoint() * v.matrix()).trace()) / 4.0;
}

SimulationReport verify(const Schedule &s, const Unitary4 &target) {
  SimulationReport rep;
  rep.u_final = evolve(s);
  const Complex overlap = (target.matrix().adjoint() * rep.u_final.matrix()).trace();
  rep.fidelity = std::abs(overlap) / 4.0;
  rep.relative_phase = std::arg(overlap);
  rep.wall_time = s.wall_time();
  rep.drift_time = s.declared_drift_time;
  return rep;
}

std::vector<SimulationReport> verify_batch(
    const std::vector<std::pair<Schedule, Unitary4>> &jobs) {
  std::vector<std::future<SimulationReport>> pending;
  pending.reserve(jobs.size());
  for (const auto &job : jobs) {
    pending.push_back(std::async(std::launch::async,
                                 [&job] { return verify(job.first, job.second); }));
  }
  std::vector<SimulationReport> out;
  out.reserve(jobs.size());
  for (auto &f : pending) out.push_back(f.get());
  return out;
}

}  // namespace twoq
