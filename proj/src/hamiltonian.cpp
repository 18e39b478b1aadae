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

#include "twoq/hamiltonian.hpp"

#include <cmath>

namespace twoq {

HamiltonianModel::HamiltonianModel(double coupling_j) : coupling_j_(coupling_j) {
  if (!(coupling_j > 0.0) || !std::isfinite(coupling_j)) {
    throw Error(ErrorCode::NonPositiveCoupling, "coupling J must be positive");
  }
  const Matrix2 &id = pauli::I();
  drift_ = (kPi / 2) * coupling_j * pauli::ZZ();
  controls_ = {kPi * kron(pauli::X(), id), kPi * kron(pauli::Y(), id),
               kPi * kron(id, pauli::X()), kPi * kron(id, pauli::Y())};
}

Hermitian4 HamiltonianModel::hamiltonian(const std::array<double, 4> &v,
                                         bool with_drift) const {
  Matrix4 h = with_drift ? drift_ : Matrix4::Zero();
  for (int i = 0; i < 4; ++i) h += v[i] * controls_[i];
  return Hermitian4(h);
}

}  // namespace twoq
