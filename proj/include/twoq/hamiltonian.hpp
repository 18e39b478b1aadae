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

#include <array>

#include "twoq/linalg.hpp"

namespace twoq {

/// Heteronuclear two-spin Hamiltonian H(t) = H_d + sum_i v_i(t) H_i with
///   H_d = (pi/2) J sz (x) sz,
///   H1 = pi sx (x) 1, H2 = pi sy (x) 1, H3 = pi 1 (x) sx, H4 = pi 1 (x) sy.
class HamiltonianModel {
 public:
  /// Throws Error(NonPositiveCoupling) unless coupling_j > 0.
  explicit HamiltonianModel(double coupling_j);

  double coupling_j() const { return coupling_j_; }
  const Matrix4 &drift() const { return drift_; }
  const Matrix4 &control(int i) const { return controls_.at(i); }

  /// H_d + sum v_i H_i, optionally without the drift term.
  Hermitian4 hamiltonian(const std::array<double, 4> &v, bool with_drift = true) const;

 private:
  double coupling_j_;
  Matrix4 drift_;
  std::array<Matrix4, 4> controls_;
};

}  // namespace twoq
