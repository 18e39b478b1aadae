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

// Fixed-size complex matrix arithmetic for two-qubit operators.
//
// Qubit 1 is the left Kronecker factor: kron(a, b)(2i+k, 2j+l) = a(i,j) b(k,l).

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <numbers>

#include "twoq/errors.hpp"

namespace twoq {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

namespace pauli {
const Matrix2 &I();
const Matrix2 &X();
const Matrix2 &Y();
const Matrix2 &Z();
// The 16 products sigma_i (x) sigma_j, index 4*i + j with 0=I, 1=X, 2=Y, 3=Z.
const std::array<Matrix4, 16> &products();
inline const Matrix4 &XX() { return products()[5]; }
inline const Matrix4 &YY() { return products()[10]; }
inline const Matrix4 &ZZ() { return products()[15]; }
}  // namespace pauli

Matrix4 kron(const Matrix2 &a, const Matrix2 &b);

/// Determinant by LU with partial pivoting.
Complex det4(const Matrix4 &m);
Complex det2(const Matrix2 &m);

/// max_{ij} |m_ij|
double max_abs(const Matrix4 &m);
double max_abs(const Matrix2 &m);
bool all_finite(const Matrix4 &m);

/// ||U^dagger U - I||_max
double unitarity_defect(const Matrix4 &m);
double unitarity_defect(const Matrix2 &m);

/// Single-qubit rotation exp(-i theta sigma / 2) about x, y or z.
Matrix2 rx(double theta);
Matrix2 ry(double theta);
Matrix2 rz(double theta);

/// Wrap an angle into (-pi, pi].
double wrap_angle(double a);

class Unitary4 {
 public:
  /// Throws Error(NotUnitary) when ||U^dagger U - I||_max > tol or an entry
  /// is not finite.
  explicit Unitary4(const Matrix4 &m);
  Unitary4(const Matrix4 &m, double tol);

  static Unitary4 identity();
  /// Skips the unitarity check. Only for values produced by exact unitary
  /// constructions (products, exponentials).
  static Unitary4 trusted(const Matrix4 &m);

  const Matrix4 &matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }
  Unitary4 adjoint() const;
  Unitary4 operator*(const Unitary4 &o) const;

 private:
  struct Unchecked {};
  Unitary4(const Matrix4 &m, Unchecked) : m_(m) {}
  Matrix4 m_;
};

class Hermitian4 {
 public:
  /// Throws Error(NonHermitian) when ||H - H^dagger||_max > tol.
  explicit Hermitian4(const Matrix4 &m);
  Hermitian4(const Matrix4 &m, double tol);

  const Matrix4 &matrix() const { return m_; }

 private:
  Matrix4 m_;
};

/// exp(-i t H) through the spectral decomposition of H.
Unitary4 expm_hermitian(const Hermitian4 &h, double t);

}  // namespace twoq
