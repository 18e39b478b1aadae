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

#include <catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "twoq/gates.hpp"
#include "twoq/kak.hpp"

using namespace twoq;

namespace {

void check_chamber(const CanonicalCoordinates &c) {
  CHECK(c.c1 <= kPi / 2 + 1e-12);
  CHECK(c.c1 >= c.c2 - 1e-12);
  CHECK(c.c2 >= c.c3 - 1e-12);
  CHECK(c.c3 >= 0.0);
}

void check_su2(const Matrix2 &m) {
  CHECK(unitarity_defect(m) < 1e-12);
  CHECK(std::abs(det2(m) - Complex(1.0)) < 1e-12);
}

}  // namespace

TEST_CASE("cartan_exp matches the series exponential", "[kak]") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int t = 0; t < 50; ++t) {
    const double c1 = d(rng), c2 = d(rng), c3 = d(rng);
    CHECK(oracle::max_abs(cartan_exp(c1, c2, c3) - oracle::cartan(c1, c2, c3)) < 1e-13);
  }
}

TEST_CASE("factor_local splits tensor products", "[kak]") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const oracle::M4 k = std::polar(1.0, 0.3 * t) * oracle::random_local(rng);
    const LocalGate g = factor_local(k);
    check_su2(g.a);
    check_su2(g.b);
    CHECK(oracle::max_abs(g.matrix() - k) < 1e-12);
  }
  try {
    factor_local(gate_matrix(gate::Cnot{}).matrix());
    FAIL("expected NotLocal");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotLocal);
  }
}

TEST_CASE("decomposition reconstructs random unitaries", "[kak]") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 300; ++t) {
    const Unitary4 u(oracle::random_unitary(rng));
    const auto d = kak_decompose(u);
    check_chamber(d.coords);
    check_su2(d.k1.a);
    check_su2(d.k1.b);
    check_su2(d.k2.a);
    check_su2(d.k2.b);
    CHECK(std::abs(d.zz_sign) == 1);
    CHECK(max_abs(Matrix4(reconstruct(d).matrix() - u.matrix())) < 1e-9);
    const auto c = canonical_coords(u);
    CHECK(d.coords.c1 == Catch::Approx(c.c1).margin(1e-8));
    CHECK(d.coords.c2 == Catch::Approx(c.c2).margin(1e-8));
    CHECK(d.coords.c3 == Catch::Approx(c.c3).margin(1e-8));
  }
}

TEST_CASE("library gates land on their chamber points", "[kak]") {
  struct Case {
    GateSpec spec;
    std::array<double, 3> want;
  };
  const std::vector<Case> cases{
      {gate::Cnot{}, {kPi / 2, 0, 0}},
      {gate::Swap{}, {kPi / 2, kPi / 2, kPi / 2}},
      {gate::SqrtSwap{}, {kPi / 4, kPi / 4, kPi / 4}},
      {gate::ControlledU{kPi / 4, 0, 0}, {kPi / 4, 0, 0}},
  };
  for (const auto &c : cases) {
    const Unitary4 u = gate_matrix(c.spec);
    const auto d = kak_decompose(u);
    INFO(gate_name(c.spec));
    const auto got = d.coords.as_array();
    for (int k = 0; k < 3; ++k) CHECK(got[k] == Catch::Approx(c.want[k]).margin(1e-9));
    CHECK(max_abs(Matrix4(reconstruct(d).matrix() - u.matrix())) < 1e-10);
  }
}

TEST_CASE("mirror gates carry a negative ZZ sign", "[kak]") {
  const Unitary4 u(oracle::cartan(0.8, 0.5, -0.2));
  const auto d = kak_decompose(u);
  CHECK(d.zz_sign == -1);
  CHECK(d.coords.c3 == Catch::Approx(0.2).margin(1e-10));
  CHECK(max_abs(Matrix4(reconstruct(d).matrix() - u.matrix())) < 1e-10);
  CHECK(kak_decompose(Unitary4(oracle::cartan(0.8, 0.5, 0.2))).zz_sign == 1);
}

TEST_CASE("face and edge points reconstruct", "[kak]") {
  std::mt19937_64 rng(53);
  const std::vector<std::array<double, 3>> points{
      {0, 0, 0},         {kPi / 2, 0, 0},   {kPi / 2, kPi / 2, 0}, {kPi / 2, 0.4, 0.4},
      {0.7, 0.7, 0.7},   {0.9, 0.9, 0.1},   {0.9, 0.3, 0.3},       {kPi / 2, 1.0, 0.3},
      {kPi / 2, 1.0, 0}, {1e-9, 0, 0},
  };
  for (const auto &p : points) {
    for (double sign : {1.0, -1.0}) {
      const Unitary4 u(oracle::random_local(rng) * oracle::cartan(p[0], p[1], sign * p[2]) *
                       oracle::random_local(rng));
      const auto d = kak_decompose(u);
      check_chamber(d.coords);
      CHECK(max_abs(Matrix4(reconstruct(d).matrix() - u.matrix())) < 1e-9);
    }
  }
}

TEST_CASE("explicit CNOT factorization", "[kak]") {
  const auto d = cnot_textbook_decomposition();
  CHECK(oracle::max_abs(reconstruct(d).matrix() - oracle::cnot()) < 1e-12);
  CHECK(oracle::phase_distance(reconstruct(d).matrix(), oracle::cnot()) < 1e-12);
}

TEST_CASE("decomposition is deterministic", "[kak]") {
  std::mt19937_64 rng(59);
  const Unitary4 u(oracle::random_unitary(rng));
  const auto a = kak_decompose(u);
  const auto b = kak_decompose(u);
  CHECK(a.k1.matrix() == b.k1.matrix());
  CHECK(a.k2.matrix() == b.k2.matrix());
  CHECK(a.coords.as_array() == b.coords.as_array());
  CHECK(a.global_phase == b.global_phase);
}
