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

// Local invariants of two-qubit gates.
//
// In the magic basis O, local gates SU(2) x SU(2) act as real orthogonal
// matrices, so the spectrum of m(U) = U_B^T U_B (U_B = O^dagger U O) depends
// only on the nonlocal content of U. G1 and G2 are the two complex
// invariants built from tr m and tr m^2, normalized by det U so that any
// U(4) input is accepted without fixing a global phase.

#include "twoq/linalg.hpp"

namespace twoq {

/// The fixed magic-basis matrix O.
const Unitary4 &magic_basis();

struct LocalInvariants {
  Complex g1;
  Complex g2;
};

/// Real decomposition G1 = a + i b, G2 = c.
struct ABCTriple {
  double a = 0;
  double b = 0;
  double c = 0;
};

/// U_B = O^dagger U O
Matrix4 magic_transform(const Unitary4 &u);

LocalInvariants local_invariants(const Unitary4 &u);

/// Throws Error(NonRealG2) when |Im G2| exceeds the imag_g2 tolerance.
ABCTriple abc_from_invariants(const LocalInvariants &inv);

/// Closed-form (a, b, c) of exp(i/2 (c1 XX + c2 YY + c3 ZZ)).
ABCTriple abc_from_coords(double c1, double c2, double c3);

}  // namespace twoq
