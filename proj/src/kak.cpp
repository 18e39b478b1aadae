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

#include "twoq/kak.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace twoq {

namespace {

using RealMatrix4 = Eigen::Matrix4d;

// Eigenphases of exp(i/2 (c1 XX + c2 YY + c3 ZZ)) on the columns of the magic
// basis: (Phi+, i Psi+, Psi-, i Phi-).
std::array<double, 4> magic_phases(double c1, double c2, double c3) {
  return {(c1 - c2 + c3) / 2, (c1 + c2 - c3) / 2, -(c1 + c2 + c3) / 2,
          (-c1 + c2 + c3) / 2};
}

bool is_zero(Complex z, double eps) { return std::abs(z) <= eps; }

// Flip the overall sign of a det-1 2x2 factor when the first nonzero entry
// has negative real part (or zero real and negative imaginary part).
bool needs_sign_flip(const Matrix2 &m) {
  constexpr double eps = 1e-12;
  for (int i = 0; i < 4; ++i) {
    const Complex z = m(i / 2, i % 2);
    if (is_zero(z, eps)) continue;
    if (z.real() < -eps) return true;
    if (std::abs(z.real()) <= eps && z.imag() < 0) return true;
    return false;
  }
  return false;
}

Matrix2 normalize_su2(const Matrix2 &m) {
  const Complex d = det2(m);
  if (std::abs(d) < 1e-12) {
    throw Error(ErrorCode::NotLocal, "local factor is singular");
  }
  return m / std::sqrt(d);
}

// Real orthogonal Q (det +1) diagonalizing the symmetric unitary m.
// m = X + iY with X, Y real symmetric and commuting; a generic real
// combination X + r Y shares their eigenvectors. Several combinations are
// tried and the one leaving the smallest off-diagonal residue is kept, which
// also covers degenerate spectra (any orthonormal basis of an eigenspace
// works).
RealMatrix4 diagonalize_symmetric_unitary(const Matrix4 &m) {
  const RealMatrix4 re = 0.5 * (m.real() + m.real().transpose());
  const RealMatrix4 im = 0.5 * (m.imag() + m.imag().transpose());
  static constexpr std::array<double, 5> kMix{0.6180339887498949, 1.4142135623730951,
                                              -0.3183098861837907, 2.718281828459045,
                                              -1.7320508075688772};
  RealMatrix4 best;
  double best_off = std::numeric_limits<double>::infinity();
  for (double r : kMix) {
    Eigen::SelfAdjointEigenSolver<RealMatrix4> eig(re + r * im);
    const RealMatrix4 q = eig.eigenvectors();
    Matrix4 d = q.transpose().cast<Complex>() * m * q.cast<Complex>();
    d.diagonal().setZero();
    const double off = max_abs(d);
    if (off < best_off) {
      best_off = off;
      best = q;
    }
    if (off < 1e-13) break;
  }
  if (best.determinant() < 0) best.col(0) = -best.col(0);
  return best;
}

// Tracks U = e^{i phase} K1 cartan_exp(c) K2 while c is moved into the
// chamber by local moves.
struct Canonicalizer {
  Matrix4 k1;
  Matrix4 k2;
  std::array<double, 3> c;
  double phase;

  const Matrix2 &axis(int j) const {
    return j == 0 ? pauli::X() : (j == 1 ? pauli::Y() : pauli::Z());
  }

  // c_j -> c_j - n pi using exp(i pi/2 sj sj) = i sj sj.
  void shift(int j, long n) {
    if (n == 0) return;
    c[j] -= static_cast<double>(n) * kPi;
    if (n % 2 != 0) k2 = kron(axis(j), axis(j)) * k2;
    phase += static_cast<double>(n) * kPi / 2;
  }

  // Negate c_j and c_k by conjugating with sigma_l (x) 1, l the third axis.
  void flip(int j, int k) {
    const int l = 3 - j - k;
    const Matrix4 s = kron(axis(l), Matrix2::Identity());
    k1 = k1 * s;
    k2 = s * k2;
    c[j] = -c[j];
    c[k] = -c[k];
  }

  // Exchange c_j and c_k. V = R(pi/2) (x) R(pi/2) about the third axis maps
  // s_j s_j <-> s_k s_k under conjugation, so A(c) = V^dagger A(c') V.
  void swap(int j, int k) {
    const int l = 3 - j - k;
    const Matrix2 r = l == 0 ? rx(kPi / 2) : (l == 1 ? ry(kPi / 2) : rz(kPi / 2));
    const Matrix4 v = kron(r, r);
    k1 = k1 * v.adjoint();
    k2 = v * k2;
    std::swap(c[j], c[k]);
  }
};

}  // namespace

Matrix4 LocalGate::matrix() const { return std::exp(kI * phase) * kron(a, b); }

Matrix4 cartan_exp(double c1, double c2, double c3) {
  const auto th = magic_phases(c1, c2, c3);
  Eigen::Vector4cd d;
  for (int k = 0; k < 4; ++k) d(k) = std::exp(kI * th[k]);
  const Matrix4 &o = magic_basis().matrix();
  return o * d.asDiagonal() * o.adjoint();
}

Matrix4 KakDecomposition::center() const {
  return cartan_exp(coords.c1, coords.c2, zz_sign * coords.c3);
}

LocalGate factor_local(const Matrix4 &k) {
  // Reshuffle: R((i,j),(p,q)) = k(2i+p, 2j+q), so A (x) B -> vec(A) vec(B)^T.
  Matrix4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) r(2 * i + j, 2 * p + q) = k(2 * i + p, 2 * j + q);

  Eigen::JacobiSVD<Matrix4> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto &sv = svd.singularValues();
  const double tol = tolerances().not_local;
  if (sv(1) > tol || sv(0) <= tol) {
    std::ostringstream msg;
    msg << "operator is not a Kronecker product: second singular value of the "
           "reshuffled matrix is "
        << sv(1) << " (tolerance " << tol << ")";
    throw Error(ErrorCode::NotLocal, msg.str());
  }
  const double scale = std::sqrt(sv(0));
  Matrix2 a, b;
  for (int i = 0; i < 4; ++i) {
    a(i / 2, i % 2) = scale * svd.matrixU()(i, 0);
    b(i / 2, i % 2) = scale * std::conj(svd.matrixV()(i, 0));
  }
  LocalGate out;
  out.a = normalize_su2(a);
  out.b = normalize_su2(b);
  if (needs_sign_flip(out.a)) out.a = -out.a;
  if (needs_sign_flip(out.b)) out.b = -out.b;
  const Complex overlap = (kron(out.a, out.b).adjoint() * k).trace();
  out.phase = wrap_angle(std::arg(overlap));
  return out;
}

KakDecomposition kak_decompose(const Unitary4 &u) {
  const Matrix4 &o = magic_basis().matrix();

  // Move to SU(4); the quarter root of det U becomes part of the phase.
  const Complex root = std::pow(det4(u.matrix()), 0.25);
  const Matrix4 v = u.matrix() / root;

  const Matrix4 vb = o.adjoint() * v * o;
  const Matrix4 m = vb.transpose() * vb;
  const RealMatrix4 q = diagonalize_symmetric_unitary(m);
  const Matrix4 qc = q.cast<Complex>();
  const Matrix4 dm = qc.transpose() * m * qc;

  // D^2 = diag(dm). Half-angles fixed so that sum(theta) = 0 mod 2 pi, which
  // makes D = diag(e^{i theta}) the magic image of some cartan_exp(c).
  std::array<double, 4> theta{};
  double total = 0;
  for (int k = 0; k < 4; ++k) {
    theta[k] = std::arg(dm(k, k)) / 2;
    total += theta[k];
  }
  if (std::cos(total) < 0) theta[0] += kPi;

  Eigen::Vector4cd dinv;
  for (int k = 0; k < 4; ++k) dinv(k) = std::exp(-kI * theta[k]);
  // vb = Q1 D Q^T with Q1 real orthogonal.
  const Matrix4 q1 = (vb * qc * dinv.asDiagonal()).real().cast<Complex>();

  Canonicalizer can;
  can.k1 = o * q1 * o.adjoint();
  can.k2 = o * qc.transpose() * o.adjoint();
  can.c = {theta[0] + theta[1], theta[1] + theta[3], theta[0] + theta[3]};
  can.phase = std::arg(root);

  // Each coordinate into (-pi/2, pi/2].
  for (int j = 0; j < 3; ++j) {
    can.shift(j, static_cast<long>(std::ceil((can.c[j] - kPi / 2) / kPi)));
  }
  // Descending by magnitude.
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < 2; ++j) {
      if (std::abs(can.c[j]) < std::abs(can.c[j + 1])) can.swap(j, j + 1);
    }
  }
  if (can.c[0] < 0) can.flip(0, 2);
  if (can.c[1] < 0) can.flip(1, 2);
  // On the c1 = pi/2 face a negative c3 is equivalent to a positive one.
  if (can.c[2] < 0 && can.c[0] >= kPi / 2 - 1e-12) {
    can.flip(0, 2);
    can.shift(0, -1);
  }

  KakDecomposition out;
  out.zz_sign = can.c[2] < 0 ? -1 : 1;
  out.coords = {std::min(can.c[0], kPi / 2), can.c[1], std::abs(can.c[2])};

  LocalGate k1 = factor_local(can.k1);
  LocalGate k2 = factor_local(can.k2);
  out.global_phase = wrap_angle(can.phase + k1.phase + k2.phase);
  k1.phase = 0;
  k2.phase = 0;
  out.k1 = k1;
  out.k2 = k2;

  const double err = max_abs(Matrix4(reconstruct(out).matrix() - u.matrix()));
  const double tol = tolerances().reconstruction;
  if (!(err <= tol)) {
    std::ostringstream msg;
    msg << "KAK reconstruction residual " << err << " exceeds tolerance " << tol;
    throw Error(ErrorCode::ReconstructionFailed, msg.str());
  }
  return out;
}

Unitary4 reconstruct(const KakDecomposition &d) {
  return Unitary4::trusted(std::exp(kI * d.global_phase) * d.k1.matrix() *
                           d.center() * d.k2.matrix());
}

KakDecomposition cnot_textbook_decomposition() {
  // exp(i t s) = R_s(-2t)
  KakDecomposition d;
  d.k1.a = ry(kPi / 2) * rx(-kPi / 2);
  d.k1.b = rx(kPi / 2) * ry(-kPi);
  d.coords = {kPi / 2, 0, 0};
  d.k2.a = ry(-kPi / 2);
  d.k2.b = ry(kPi);
  d.global_phase = kPi / 4;
  return d;
}

}  // namespace twoq
