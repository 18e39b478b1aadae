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

#include "twoq/mintime.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace twoq {

namespace {

double cubic_residual(const CubicCoefficients &k, double x) {
  return std::abs(((x + k.p) * x + k.q) * x + k.r);
}

// Newton steps on X^3 + P X + Q, kept only while they reduce |f|.
double polish_root(double x, double P, double Q) {
  auto f = [&](double v) { return (v * v + P) * v + Q; };
  for (int it = 0; it < 4; ++it) {
    const double fx = f(x);
    const double fp = 3 * x * x + P;
    if (fx == 0.0 || fp == 0.0) break;
    const double next = x - fx / fp;
    if (!(std::abs(f(next)) < std::abs(fx))) break;
    x = next;
  }
  return x;
}

}  // namespace

CubicCoefficients cubic_coefficients(const ABCTriple &abc) {
  const double mod = std::hypot(abc.a, abc.b);
  const double half = (1.0 - abc.c) / 2.0;
  return {-(1.0 + half), mod + half, -(mod - abc.a) / 2.0};
}

DepressedCubic depress(const CubicCoefficients &k) {
  const Tolerances tol = tolerances();
  DepressedCubic dc;
  dc.source = k;
  dc.shift = -k.p / 3.0;
  dc.P = k.q - k.p * k.p / 3.0;
  dc.Q = 2.0 * k.p * k.p * k.p / 27.0 - k.p * k.q / 3.0 + k.r;
  dc.discriminant = dc.P * dc.P * dc.P / 27.0 + dc.Q * dc.Q / 4.0;
  if (dc.discriminant > tol.positive_disc) {
    std::ostringstream msg;
    msg << "cubic discriminant P^3/27 + Q^2/4 = " << dc.discriminant
        << " exceeds tolerance " << tol.positive_disc
        << "; the input is not a two-qubit invariant triple";
    throw Error(ErrorCode::PositiveDiscriminant, msg.str());
  }
  // disc = (|P|^3 / 27)(T^2 - 1), so 1 - |T| measures degeneracy independently
  // of how tightly the roots cluster.
  if (dc.P < 0.0 && -dc.P > tol.triple_root) {
    const double T = 27.0 * dc.Q / (2.0 * std::pow(-3.0 * dc.P, 1.5));
    dc.T = T;
    if (1.0 - std::abs(T) > tol.degenerate_disc) dc.theta = std::acos(std::clamp(T, -1.0, 1.0));
  }
  return dc;
}

CubicRoots solve_depressed(const DepressedCubic &dc) {
  const Tolerances tol = tolerances();
  if (dc.discriminant > tol.positive_disc) {
    throw Error(ErrorCode::PositiveDiscriminant,
                "cannot solve a cubic with positive discriminant");
  }

  std::array<double, 3> X{};
  if (dc.theta) {
    // Three real roots: X_k = -2 sqrt(-P/3) cos((theta + 2 pi k)/3).
    const double m = 2.0 * std::sqrt(-dc.P / 3.0);
    for (int k = 0; k < 3; ++k) {
      X[k] = polish_root(-m * std::cos((*dc.theta + 2.0 * kPi * k) / 3.0), dc.P, dc.Q);
    }
  } else {
    // Double root: X1 = -2 (Q/2)^(1/3), X2 = X3 = (Q/2)^(1/3). The simple
    // root is polished and the pair recovered from the deflated quadratic
    // X^2 + X1 X + (P + X1^2), whose squared gap is -3 X1^2 - 4P.
    if (std::abs(dc.P) <= tol.triple_root && std::abs(dc.Q) <= tol.triple_root) {
      X = {0.0, 0.0, 0.0};
    } else {
      const double x1 = polish_root(-2.0 * std::cbrt(dc.Q / 2.0), dc.P, dc.Q);
      const double gap2 = -3.0 * x1 * x1 - 4.0 * dc.P;
      const double split = gap2 > tol.double_root ? std::sqrt(gap2) : 0.0;
      X = {x1, (-x1 + split) / 2.0, (-x1 - split) / 2.0};
    }
  }
  std::sort(X.begin(), X.end(), std::greater<>());

  CubicRoots out;
  for (int k = 0; k < 3; ++k) {
    double x = X[k] + dc.shift;
    const double res = cubic_residual(dc.source, x);
    const double edge = std::clamp(x, 0.0, 1.0);
    const bool in_range = (x >= -tol.root_clamp && x <= 1.0 + tol.root_clamp) ||
                          cubic_residual(dc.source, edge) <= tol.root_residual;
    if (!(res <= tol.root_residual) || !in_range) {
      std::ostringstream msg;
      msg << "cubic root x = " << x << " has residual " << res
          << " (tolerance " << tol.root_residual << ") or lies outside [0, 1]";
      throw Error(ErrorCode::ResidualTooLarge, msg.str());
    }
    if (std::abs(x) <= tol.root_snap) x = 0.0;
    if (std::abs(1.0 - x) <= tol.root_snap) x = 1.0;
    out.X[k] = X[k];
    out.x[k] = std::clamp(x, 0.0, 1.0);
    out.residual[k] = res;
  }
  return out;
}

CanonicalCoordinates coords_from_roots(const CubicRoots &roots) {
  std::array<double, 3> c{};
  for (int k = 0; k < 3; ++k) c[k] = std::asin(std::sqrt(roots.x[k]));
  std::sort(c.begin(), c.end(), std::greater<>());
  return {c[0], c[1], c[2]};
}

CanonicalCoordinates canonical_coords(const Unitary4 &u) {
  const ABCTriple abc = abc_from_invariants(local_invariants(u));
  return coords_from_roots(solve_depressed(depress(cubic_coefficients(abc))));
}

MinTimeReport min_time(const Unitary4 &u, double coupling_j) {
  if (!(coupling_j > 0.0) || !std::isfinite(coupling_j)) {
    throw Error(ErrorCode::NonPositiveCoupling, "coupling J must be positive");
  }
  MinTimeReport rep;
  rep.coupling_j = coupling_j;
  rep.invariants = local_invariants(u);
  rep.abc = abc_from_invariants(rep.invariants);
  rep.cubic = depress(cubic_coefficients(rep.abc));
  rep.roots = solve_depressed(rep.cubic);
  rep.coords = coords_from_roots(rep.roots);
  rep.t_star = rep.coords.sum() / (kPi * coupling_j);
  return rep;
}

}  // namespace twoq
