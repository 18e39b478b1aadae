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

// Canonical coordinates and minimal gate time from local invariants.
//
// sin^2 c1, sin^2 c2, sin^2 c3 are the roots of the monic cubic
//   x^3 + p x^2 + q x + r,
//   p = -(1 + (1 - c)/2), q = sqrt(a^2 + b^2) + (1 - c)/2,
//   r = -(sqrt(a^2 + b^2) - a)/2,
// which is solved through the depressed form X^3 + P X + Q = 0, x = X - p/3.
// The minimal time under the ZZ drift (pi/2) J sigma_z sigma_z is
// (c1 + c2 + c3)/(pi J).

#include <array>
#include <optional>

#include "twoq/invariants.hpp"

namespace twoq {

struct CubicCoefficients {
  double p = 0;
  double q = 0;
  double r = 0;
};

struct DepressedCubic {
  double P = 0;
  double Q = 0;
  double discriminant = 0;  // P^3/27 + Q^2/4
  std::optional<double> T;
  std::optional<double> theta;
  double shift = 0;  // x = X + shift, shift = -p/3
  CubicCoefficients source;
};

struct CubicRoots {
  std::array<double, 3> x{};  // sin^2 c_i in [0, 1], descending
  std::array<double, 3> X{};  // matching roots of the depressed cubic
  std::array<double, 3> residual{};
};

struct CanonicalCoordinates {
  double c1 = 0;
  double c2 = 0;
  double c3 = 0;

  double sum() const { return c1 + c2 + c3; }
  std::array<double, 3> as_array() const { return {c1, c2, c3}; }
};

struct MinTimeReport {
  CanonicalCoordinates coords;
  double t_star = 0;      // seconds
  double coupling_j = 0;  // Hz
  LocalInvariants invariants;
  ABCTriple abc;
  DepressedCubic cubic;
  CubicRoots roots;
};

CubicCoefficients cubic_coefficients(const ABCTriple &abc);

/// Throws Error(PositiveDiscriminant) when P^3/27 + Q^2/4 exceeds the
/// positive_disc tolerance.
DepressedCubic depress(const CubicCoefficients &coeffs);

/// Throws Error(ResidualTooLarge) when a root misses the cubic by more than
/// root_residual or leaves [0, 1] by more than root_clamp.
CubicRoots solve_depressed(const DepressedCubic &dc);

/// c_i = arcsin(sqrt(x_i)), sorted descending.
CanonicalCoordinates coords_from_roots(const CubicRoots &roots);

CanonicalCoordinates canonical_coords(const Unitary4 &u);

/// Throws Error(NonPositiveCoupling) unless coupling_j > 0.
MinTimeReport min_time(const Unitary4 &u, double coupling_j);

}  // namespace twoq
