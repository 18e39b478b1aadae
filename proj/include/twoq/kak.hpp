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

// Cartan decomposition
//   U = e^{i phi} (A1 (x) B1) exp(i/2 (c1 XX + c2 YY + s c3 ZZ)) (A2 (x) B2)
// with A_k, B_k in SU(2), pi/2 >= c1 >= c2 >= c3 >= 0 and s = +/-1.
//
// s records the chirality of the gate. A gate and its mirror image share
// |G1| and G2 but have opposite Im G1; they are not locally equivalent, so the
// sign of the ZZ term cannot be moved into the local factors.

#include "twoq/mintime.hpp"

namespace twoq {

struct LocalGate {
  Matrix2 a = Matrix2::Identity();  // qubit 1
  Matrix2 b = Matrix2::Identity();  // qubit 2
  double phase = 0;

  Matrix4 matrix() const;
};

struct KakDecomposition {
  LocalGate k1;
  CanonicalCoordinates coords;
  int zz_sign = 1;
  LocalGate k2;
  double global_phase = 0;

  /// exp(i/2 (c1 XX + c2 YY + zz_sign c3 ZZ))
  Matrix4 center() const;
};

/// exp(i/2 (c1 XX + c2 YY + c3 ZZ)), evaluated exactly in the magic basis
/// where the three terms are simultaneously diagonal.
Matrix4 cartan_exp(double c1, double c2, double c3);

/// Factor k = e^{i phi} (A (x) B) with det A = det B = 1. The sign of A and
/// of B is fixed so that the first nonzero entry (row-major) has positive
/// real part, or zero real part and positive imaginary part.
/// Throws Error(NotLocal) when k is not a Kronecker product.
LocalGate factor_local(const Matrix4 &k);

/// Throws Error(ReconstructionFailed) if the recovered factors do not
/// reproduce u within the reconstruction tolerance.
KakDecomposition kak_decompose(const Unitary4 &u);

Unitary4 reconstruct(const KakDecomposition &d);

/// Hand-derived decomposition of CNOT with coordinates (pi/2, 0, 0):
///   CNOT ~ (Ry(pi/2) Rx(-pi/2) (x) Rx(pi/2) Ry(-pi)) exp(i pi/4 XX)
///          (Ry(-pi/2) (x) Ry(pi))
/// i.e. exp(-i pi/4 sy) exp(i pi/4 sx) (x) exp(-i pi/4 sx) exp(i pi/2 sy) on
/// the left and exp(i pi/4 sy) (x) exp(-i pi/2 sy) on the right, with the free
/// phases of the factor family set to zero.
KakDecomposition cnot_textbook_decomposition();

}  // namespace twoq
