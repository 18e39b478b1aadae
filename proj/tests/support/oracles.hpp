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

// Reference implementations used by the tests. Nothing here calls into the
// library, so agreement with the library is a real cross-check.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace oracle {

using C = std::complex<double>;
using M2 = Eigen::Matrix2cd;
using M4 = Eigen::Matrix4cd;

inline constexpr double pi = std::numbers::pi;
inline constexpr C I{0.0, 1.0};

inline M2 sx() { M2 m; m << 0, 1, 1, 0; return m; }
inline M2 sy() { M2 m; m << 0, -I, I, 0; return m; }
inline M2 sz() { M2 m; m << 1, 0, 0, -1; return m; }
inline M2 id2() { return M2::Identity(); }

inline M4 kron(const M2 &a, const M2 &b) {
  M4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

// Permutation expansion of the determinant.
inline C det_leibniz(const M4 &m) {
  std::array<int, 4> p{0, 1, 2, 3};
  C total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    C term = inversions % 2 ? -1.0 : 1.0;
    for (int i = 0; i < 4; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Scaling and squaring with a Taylor series.
template <class M>
M expm(const M &a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const M x = a / std::pow(2.0, squarings);
  M term = M::Identity(a.rows(), a.cols());
  M sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * x / double(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// exp(i/2 (c1 XX + c2 YY + c3 ZZ))
inline M4 cartan(double c1, double c2, double c3) {
  const M4 h = c1 * kron(sx(), sx()) + c2 * kron(sy(), sy()) + c3 * kron(sz(), sz());
  return expm<M4>(0.5 * I * h);
}

inline M4 cnot() {
  M4 m = M4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

inline M4 swap() {
  M4 m = M4::Zero();
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

inline M4 sqrt_swap() {
  M4 m = M4::Zero();
  m(0, 0) = m(3, 3) = 1;
  m(1, 1) = m(2, 2) = C(0.5, -0.5);
  m(1, 2) = m(2, 1) = C(0.5, 0.5);
  return m;
}

// |0><0| x I + |1><1| x exp(i (g . sigma))
inline M4 controlled_u(double g1, double g2, double g3) {
  const M2 u = expm<M2>(I * (g1 * sx() + g2 * sy() + g3 * sz()));
  M4 m = M4::Identity();
  m.block<2, 2>(2, 2) = u;
  return m;
}

inline M4 magic() {
  M4 o;
  o << 1, 0, 0, I,
       0, I, 1, 0,
       0, I, -1, 0,
       1, 0, 0, -I;
  return o / std::sqrt(2.0);
}

struct Invariants {
  C g1, g2;
};

inline Invariants invariants(const M4 &u) {
  const M4 ub = magic().adjoint() * u * magic();
  const M4 m = ub.transpose() * ub;
  const C tr = m.trace();
  const C tr2 = (m * m).trace();
  const C det = det_leibniz(u);
  return {tr * tr / (16.0 * det), (tr * tr - tr2) / (4.0 * det)};
}

struct ABC {
  double a, b, c;
};

// Invariants written directly in terms of chamber coordinates.
inline ABC abc(double c1, double c2, double c3) {
  const double cc = std::cos(c1) * std::cos(c1) * std::cos(c2) * std::cos(c2) *
                    std::cos(c3) * std::cos(c3);
  const double ss = std::sin(c1) * std::sin(c1) * std::sin(c2) * std::sin(c2) *
                    std::sin(c3) * std::sin(c3);
  return {cc - ss, 0.25 * std::sin(2 * c1) * std::sin(2 * c2) * std::sin(2 * c3),
          4 * cc - 4 * ss - std::cos(2 * c1) * std::cos(2 * c2) * std::cos(2 * c3)};
}

inline M4 random_unitary(std::mt19937_64 &rng) {
  std::normal_distribution<double> n;
  M4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = C(n(rng), n(rng));
  // Modified Gram-Schmidt on the columns.
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < j; ++k) g.col(j) -= g.col(k).dot(g.col(j)) * g.col(k);
    g.col(j) /= g.col(j).norm();
  }
  return g;
}

inline M2 random_su2(std::mt19937_64 &rng) {
  std::normal_distribution<double> n;
  double q[4];
  double norm = 0;
  for (double &v : q) {
    v = n(rng);
    norm += v * v;
  }
  norm = std::sqrt(norm);
  for (double &v : q) v /= norm;
  M2 m;
  m << C(q[0], q[3]), C(q[2], q[1]), C(-q[2], q[1]), C(q[0], -q[3]);
  return m;
}

inline M4 random_local(std::mt19937_64 &rng) {
  return kron(random_su2(rng), random_su2(rng));
}

inline double max_abs(const M4 &m) { return m.cwiseAbs().maxCoeff(); }

// max |a - e^{i phi} b| with phi chosen from the trace overlap.
inline double phase_distance(const M4 &a, const M4 &b) {
  const C overlap = (b.adjoint() * a).trace();
  const C phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : C(1.0);
  return max_abs(a - phase * b);
}

// Piecewise-constant propagator for H = (pi/2) J ZZ + pi (v1 XI + v2 YI + v3 IX + v4 IY).
struct Segment {
  double duration;
  std::array<double, 4> v;
};

inline M4 propagate(const std::vector<Segment> &segments, double j) {
  const M4 hd = 0.5 * pi * j * kron(sz(), sz());
  const std::array<M4, 4> hc{pi * kron(sx(), id2()), pi * kron(sy(), id2()),
                             pi * kron(id2(), sx()), pi * kron(id2(), sy())};
  M4 u = M4::Identity();
  for (const auto &s : segments) {
    M4 h = hd;
    for (int k = 0; k < 4; ++k) h += s.v[k] * hc[k];
    u = expm<M4>(-I * s.duration * h) * u;
  }
  return u;
}

}  // namespace oracle
