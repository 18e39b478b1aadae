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

#include "twoq/linalg.hpp"

#include <cmath>
#include <sstream>

namespace twoq {

namespace pauli {

const Matrix2 &I() {
  static const Matrix2 m = Matrix2::Identity();
  return m;
}

const Matrix2 &X() {
  static const Matrix2 m = (Matrix2() << 0, 1, 1, 0).finished();
  return m;
}

const Matrix2 &Y() {
  static const Matrix2 m = (Matrix2() << 0, -kI, kI, 0).finished();
  return m;
}

const Matrix2 &Z() {
  static const Matrix2 m = (Matrix2() << 1, 0, 0, -1).finished();
  return m;
}

const std::array<Matrix4, 16> &products() {
  static const std::array<Matrix4, 16> table = [] {
    const std::array<const Matrix2 *, 4> s{&I(), &X(), &Y(), &Z()};
    std::array<Matrix4, 16> t;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) t[4 * i + j] = kron(*s[i], *s[j]);
    }
    return t;
  }();
  return table;
}

}  // namespace pauli

Matrix4 kron(const Matrix2 &a, const Matrix2 &b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Complex det4(const Matrix4 &m) { return m.partialPivLu().determinant(); }

Complex det2(const Matrix2 &m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

double max_abs(const Matrix4 &m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const Matrix2 &m) { return m.cwiseAbs().maxCoeff(); }

bool all_finite(const Matrix4 &m) {
  for (int i = 0; i < 16; ++i) {
    const Complex z = m(i / 4, i % 4);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double unitarity_defect(const Matrix4 &m) {
  return max_abs(Matrix4(m.adjoint() * m - Matrix4::Identity()));
}

double unitarity_defect(const Matrix2 &m) {
  return max_abs(Matrix2(m.adjoint() * m - Matrix2::Identity()));
}

Matrix2 rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return (Matrix2() << c, -kI * s, -kI * s, c).finished();
}

Matrix2 ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return (Matrix2() << c, -s, s, c).finished();
}

Matrix2 rz(double theta) {
  return (Matrix2() << std::exp(-kI * (theta / 2)), 0, 0,
          std::exp(kI * (theta / 2)))
      .finished();
}

double wrap_angle(double a) {
  double w = std::remainder(a, 2 * kPi);
  if (w <= -kPi) w += 2 * kPi;
  return w;
}

Unitary4::Unitary4(const Matrix4 &m) : Unitary4(m, tolerances().unitary) {}

Unitary4::Unitary4(const Matrix4 &m, double tol) : m_(m) {
  if (!all_finite(m)) {
    throw Error(ErrorCode::NotUnitary, "matrix has non-finite entries");
  }
  const double defect = unitarity_defect(m);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "matrix is not unitary: ||U^dagger U - I||_max = " << defect
        << " exceeds tolerance " << tol;
    throw Error(ErrorCode::NotUnitary, msg.str());
  }
}

Unitary4 Unitary4::identity() { return Unitary4(Matrix4::Identity(), Unchecked{}); }

Unitary4 Unitary4::trusted(const Matrix4 &m) { return Unitary4(m, Unchecked{}); }

Unitary4 Unitary4::adjoint() const { return Unitary4(m_.adjoint(), Unchecked{}); }

Unitary4 Unitary4::operator*(const Unitary4 &o) const {
  return Unitary4(m_ * o.m_, Unchecked{});
}

Hermitian4::Hermitian4(const Matrix4 &m) : Hermitian4(m, tolerances().hermitian) {}

Hermitian4::Hermitian4(const Matrix4 &m, double tol) : m_(m) {
  if (!all_finite(m)) {
    throw Error(ErrorCode::NonHermitian, "matrix has non-finite entries");
  }
  const double defect = max_abs(Matrix4(m - m.adjoint()));
  if (defect > tol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: ||H - H^dagger||_max = " << defect
        << " exceeds tolerance " << tol;
    throw Error(ErrorCode::NonHermitian, msg.str());
  }
}

Unitary4 expm_hermitian(const Hermitian4 &h, double t) {
  if (t == 0.0) return Unitary4::identity();
  // Symmetrize so the solver sees an exactly self-adjoint input.
  const Matrix4 sym = 0.5 * (h.matrix() + h.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4> eig(sym);
  const auto &vecs = eig.eigenvectors();
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::exp(-kI * (t * eig.eigenvalues()(k)));
  return Unitary4::trusted(vecs * phases.asDiagonal() * vecs.adjoint());
}

}  // namespace twoq
