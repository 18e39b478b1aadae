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

#include "twoq/gates.hpp"

#include <cmath>

namespace twoq {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Unitary4 gate_matrix(const GateSpec &spec) {
  return std::visit(
      Overloaded{
          [](const gate::Cnot &) {
            Matrix4 m;
            m << 1, 0, 0, 0,
                 0, 1, 0, 0,
                 0, 0, 0, 1,
                 0, 0, 1, 0;
            return Unitary4::trusted(m);
          },
          [](const gate::Swap &) {
            Matrix4 m;
            m << 1, 0, 0, 0,
                 0, 0, 1, 0,
                 0, 1, 0, 0,
                 0, 0, 0, 1;
            return Unitary4::trusted(m);
          },
          [](const gate::SqrtSwap &) {
            const Complex d = (1.0 - kI) / 2.0, o = (1.0 + kI) / 2.0;
            Matrix4 m;
            m << 1, 0, 0, 0,
                 0, d, o, 0,
                 0, o, d, 0,
                 0, 0, 0, 1;
            return Unitary4::trusted(m);
          },
          [](const gate::ControlledU &g) {
            const double gamma = std::sqrt(g.gamma1 * g.gamma1 + g.gamma2 * g.gamma2 +
                                           g.gamma3 * g.gamma3);
            Matrix2 u = Matrix2::Identity();
            if (gamma > 0) {
              const Matrix2 axis =
                  (g.gamma1 * pauli::X() + g.gamma2 * pauli::Y() + g.gamma3 * pauli::Z()) /
                  gamma;
              u = std::cos(gamma) * Matrix2::Identity() + kI * std::sin(gamma) * axis;
            }
            Matrix4 m = Matrix4::Zero();
            m.block<2, 2>(0, 0) = Matrix2::Identity();
            m.block<2, 2>(2, 2) = u;
            return Unitary4::trusted(m);
          },
          [](const gate::Custom &g) { return g.matrix; },
      },
      spec);
}

std::string gate_name(const GateSpec &spec) {
  return std::visit(Overloaded{
                        [](const gate::Cnot &) { return std::string("cnot"); },
                        [](const gate::Swap &) { return std::string("swap"); },
                        [](const gate::SqrtSwap &) { return std::string("sqrtswap"); },
                        [](const gate::ControlledU &) { return std::string("cu"); },
                        [](const gate::Custom &) { return std::string("custom"); },
                    },
                    spec);
}

bool is_library_gate(const GateSpec &spec) {
  return !std::holds_alternative<gate::Custom>(spec);
}

}  // namespace twoq
