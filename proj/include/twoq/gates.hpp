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

#include <string>
#include <variant>

#include "twoq/linalg.hpp"

namespace twoq {

namespace gate {
struct Cnot {};
struct Swap {};
/// The square root of SWAP with G1 = i/4: P_sym - i P_anti.
struct SqrtSwap {};
/// |0><0| (x) 1 + |1><1| (x) exp(i (g1 sx + g2 sy + g3 sz))
struct ControlledU {
  double gamma1 = 0;
  double gamma2 = 0;
  double gamma3 = 0;
};
struct Custom {
  Unitary4 matrix;
};
}  // namespace gate

using GateSpec =
    std::variant<gate::Cnot, gate::Swap, gate::SqrtSwap, gate::ControlledU, gate::Custom>;

Unitary4 gate_matrix(const GateSpec &spec);

/// "cnot", "swap", "sqrtswap", "cu" or "custom".
std::string gate_name(const GateSpec &spec);

bool is_library_gate(const GateSpec &spec);

}  // namespace twoq
