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
#include "twoq/invariants.hpp"

using namespace twoq;

namespace {

void check_close(Complex got, Complex want, double tol = 1e-12) {
  INFO("got " << got << " want " << want);
  CHECK(std::abs(got - want) < tol);
}

}  // namespace

TEST_CASE("magic basis is unitary and matches the reference", "[invariants]") {
  CHECK(unitarity_defect(magic_basis().matrix()) < 1e-15);
  CHECK(oracle::max_abs(magic_basis().matrix() - oracle::magic()) < 1e-15);
}

TEST_CASE("local invariants of library gates", "[invariants]") {
  auto inv = local_invariants(gate_matrix(gate::Cnot{}));
  check_close(inv.g1, 0.0);
  check_close(inv.g2, 1.0);
  inv = local_invariants(gate_matrix(gate::Swap{}));
  check_close(inv.g1, -1.0);
  check_close(inv.g2, -3.0);
  inv = local_invariants(gate_matrix(gate::SqrtSwap{}));
  check_close(inv.g1, Complex(0, 0.25));
  check_close(inv.g2, 0.0);
  inv = local_invariants(Unitary4::identity());
  check_close(inv.g1, 1.0);
  check_close(inv.g2, 3.0);
}

TEST_CASE("controlled-U invariants depend only on the rotation angle", "[invariants]") {
  for (double g : {0.2, kPi / 6, kPi / 4, 1.3}) {
    const double c2 = std::cos(g) * std::cos(g);
    for (auto axis : {std::array{1.0, 0.0, 0.0}, std::array{0.0, 0.6, 0.8},
                      std::array{0.48, 0.6, -0.64}}) {
      const auto inv = local_invariants(
          gate_matrix(gate::ControlledU{g * axis[0], g * axis[1], g * axis[2]}));
      check_close(inv.g1, c2);
      check_close(inv.g2, 2 * c2 + 1);
    }
  }
}

TEST_CASE("library gates match explicit matrices", "[invariants]") {
  CHECK(oracle::max_abs(gate_matrix(gate::Cnot{}).matrix() - oracle::cnot()) == 0.0);
  CHECK(oracle::max_abs(gate_matrix(gate::Swap{}).matrix() - oracle::swap()) == 0.0);
  CHECK(oracle::max_abs(gate_matrix(gate::SqrtSwap{}).matrix() - oracle::sqrt_swap()) < 1e-15);
  CHECK(oracle::max_abs(gate_matrix(gate::ControlledU{0.3, -0.4, 0.5}).matrix() -
                        oracle::controlled_u(0.3, -0.4, 0.5)) < 1e-14);
}

TEST_CASE("invariants agree with the reference on random unitaries", "[invariants]") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const auto u = oracle::random_unitary(rng);
    const auto got = local_invariants(Unitary4(u));
    const auto want = oracle::invariants(u);
    check_close(got.g1, want.g1);
    check_close(got.g2, want.g2);
    CHECK(std::abs(got.g2.imag()) < 1e-12);
  }
}

TEST_CASE("invariants ignore local dressing and global phase", "[invariants]") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto u = oracle::random_unitary(rng);
    const oracle::M4 v = std::polar(1.0, 0.1 * t) * oracle::random_local(rng) * u *
                         oracle::random_local(rng);
    const auto a = local_invariants(Unitary4(u));
    const auto b = local_invariants(Unitary4(v));
    check_close(a.g1, b.g1, 1e-11);
    check_close(a.g2, b.g2, 1e-11);
  }
}

TEST_CASE("abc from coordinates matches invariants of the Cartan exponential", "[invariants]") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> d(0, kPi / 2);
  for (int t = 0; t < 200; ++t) {
    const double c1 = d(rng), c2 = d(rng), c3 = d(rng);
    const auto want = oracle::abc(c1, c2, c3);
    const auto direct = abc_from_coords(c1, c2, c3);
    CHECK(direct.a == Catch::Approx(want.a).margin(1e-14));
    CHECK(direct.b == Catch::Approx(want.b).margin(1e-14));
    CHECK(direct.c == Catch::Approx(want.c).margin(1e-14));
    const auto via = abc_from_invariants(local_invariants(Unitary4(oracle::cartan(c1, c2, c3))));
    CHECK(via.a == Catch::Approx(want.a).margin(1e-12));
    CHECK(via.b == Catch::Approx(want.b).margin(1e-12));
    CHECK(via.c == Catch::Approx(want.c).margin(1e-12));
  }
}

TEST_CASE("complex G2 is rejected", "[invariants]") {
  try {
    abc_from_invariants({Complex(0.5, 0.1), Complex(1.0, 1e-3)});
    FAIL("expected NonRealG2");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NonRealG2);
  }
  CHECK_NOTHROW(abc_from_invariants({Complex(0.5, 0.1), Complex(1.0, 1e-10)}));
}
