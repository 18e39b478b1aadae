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

#include "twoq/invariants.hpp"

#include <cmath>
#include <sstream>

namespace twoq {

const Unitary4 &magic_basis() {
  static const Unitary4 o = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix4 m;
    m << 1, 0, 0, kI,
         0, kI, 1, 0,
         0, kI, -1, 0,
         1, 0, 0, -kI;
    return Unitary4::trusted(s * m);
  }();
  return o;
}

Matrix4 magic_transform(const Unitary4 &u) {
  const Matrix4 &o = magic_basis().matrix();
  return o.adjoint() * u.matrix() * o;
}

LocalInvariants local_invariants(const Unitary4 &u) {
  const Matrix4 ub = magic_transform(u);
  const Matrix4 m = ub.transpose() * ub;
  const Complex tr = m.trace();
  const Complex tr2 = (m * m).trace();
  const Complex det = det4(u.matrix());
  return {tr * tr / (16.0 * det), (tr * tr - tr2) / (4.0 * det)};
}

ABCTriple abc_from_invariants(const LocalInvariants &inv) {
  const double tol = tolerances().imag_g2;
  if (std::abs(inv.g2.imag()) > tol) {
    std::ostringstream msg;
    msg << "G2 is not real: |Im G2| = " << std::abs(inv.g2.imag())
        << " exceeds tolerance " << tol;
    throw Error(ErrorCode::NonRealG2, msg.str());
  }
  return {inv.g1.real(), inv.g1.imag(), inv.g2.real()};
}

ABCTriple abc_from_coords(double c1, double c2, double c3) {
  const double k1 = std::cos(c1), k2 = std::cos(c2), k3 = std::cos(c3);
  const double s1 = std::sin(c1), s2 = std::sin(c2), s3 = std::sin(c3);
  const double cos2 = k1 * k1 * k2 * k2 * k3 * k3;
  const double sin2 = s1 * s1 * s2 * s2 * s3 * s3;
  ABCTriple out;
  out.a = cos2 - sin2;
  out.b = 0.25 * std::sin(2 * c1) * std::sin(2 * c2) * std::sin(2 * c3);
  out.c = 4 * cos2 - 4 * sin2 - std::cos(2 * c1) * std::cos(2 * c2) * std::cos(2 * c3);
  return out;
}

}  // namespace twoq
