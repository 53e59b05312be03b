// Copyright 2026 The mfkit Authors
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

#include <random>

#include "doctest.h"
#include "mfkit/orlov.hpp"
#include "support/oracles.hpp"
#include "mfkit/random.hpp"

using namespace mfkit;
using mfkit::testing::pascal;
using mfkit::fuzz::random_factorization;
using mfkit::fuzz::Rng;

namespace {

const HypersurfaceContext k3(3, 4);

BettiTable betti_of(std::initializer_list<std::tuple<int, int, Count>> cells) {
  BettiTable b;
  for (auto [i, j, c] : cells) b.add(i, j, c);
  return b;
}

}  // namespace

TEST_CASE("context") {
  CHECK(k3.a() == 0);
  CHECK(k3.e() == 1);
  CHECK(HypersurfaceContext(4, 7).a() == -2);
  CHECK(HypersurfaceContext(4, 7).e() == 2);
  CHECK_THROWS_AS(HypersurfaceContext(0, 3), DomainError);
  CHECK_THROWS_AS(HypersurfaceContext(2, 0), DomainError);
}

TEST_CASE("euclid_split examples") {
  auto check = [](const HypersurfaceContext& ctx, int j, int q, int r) {
    const EuclidSplit s = euclid_split(ctx, j);
    CHECK(s.q == q);
    CHECK(s.r == r);
  };
  check(k3, 0, 0, 0);
  check(k3, 2, 0, 2);
  check(k3, 6, -1, 2);
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 7; ++d)
      for (int j = -20; j <= 20; ++j) {
        const HypersurfaceContext ctx(n, d);
        const EuclidSplit s = euclid_split(ctx, j);
        REQUIRE(ctx.a() - j == s.q * d - s.r);
        REQUIRE((0 <= s.r && s.r < d));
      }
}

TEST_CASE("betti_to_table examples") {
  CHECK(betti_to_table(k3, BettiTable{}).empty());

  const CohomologyTable t = betti_to_table(k3, betti_of({{1, 0, 2}}));
  CHECK(t.at(0, 0) == 2);
  CHECK(t.total() == 2);
  CHECK(t.diagnostics().empty());

  const CohomologyTable u = betti_to_table(k3, betti_of({{0, 2, 2}}));
  CHECK(u.at(2, 3) == 2);
  CHECK_FALSE(u.in_support(2, 3));
  REQUIRE(u.diagnostics().size() == 1);

  CHECK_THROWS_AS(betti_to_table(HypersurfaceContext(2, 2), BettiTable{}), DomainError);
}

TEST_CASE("table_to_betti examples") {
  CohomologyTable t(3);
  t.add(0, 0, 2);
  CHECK(table_to_betti(k3, t) == betti_of({{1, 0, 2}}));
  CHECK(table_to_betti(k3, CohomologyTable(3)).empty());
  CHECK_THROWS_AS(table_to_betti(HypersurfaceContext(3, 3), t), DomainError);
  CohomologyTable outside(3);
  outside.add(4, 0, 1);
  CHECK_THROWS_AS(table_to_betti(k3, outside), DomainError);
}

TEST_CASE("translation roundtrip on random tables") {
  Rng rng(41);
  std::uniform_int_distribution<int> nd(1, 6), extra(0, 4), cells(0, 6), jj(-15, 15), hh(-6, 8);
  std::uniform_int_distribution<Count> count(1, 5);
  for (int k = 0; k < 200; ++k) {
    const int n = nd(rng);
    const HypersurfaceContext ctx(n, n + 1 + extra(rng));
    BettiTable b;
    const int m = cells(rng);
    for (int c = 0; c < m; ++c) b.add(c % 2, jj(rng), count(rng));
    const CohomologyTable t = betti_to_table(ctx, b);
    REQUIRE(t.total() == b.total());
    REQUIRE(table_to_betti(ctx, t) == b);

    CohomologyTable u(n);
    std::uniform_int_distribution<int> pp(ctx.a(), ctx.a() + ctx.d() - 1);
    for (int c = 0; c < m; ++c) u.add(pp(rng), hh(rng), count(rng));
    REQUIRE(betti_to_table(ctx, table_to_betti(ctx, u)) == u);
  }
}

TEST_CASE("rho_of_mf examples") {
  const Field Qi = Field::gaussian_rationals();
  const MatrixFactorization fermat = mf_fermat(Qi, 2, 2);
  CHECK(rho_of_mf(fermat) == 4);
  CHECK(rho_of_table(betti_to_table(k3, mf_betti(fermat))) == 4);
  CHECK(rho_of_mf(mf_zero(fermat.f())) == 0);
  const MatrixFactorization padded = mf_direct_sum(fermat, mf_trivial_unit_first(fermat.f()));
  CHECK_THROWS_AS(rho_of_mf(padded), DomainError);
  CHECK(rho_of_mf(mf_reduce(padded)) == 4);

  Rng rng(2);
  for (int k = 0; k < 30; ++k) {
    const MatrixFactorization F = mf_reduce(random_factorization(Field::prime(13), rng));
    const int n = static_cast<int>(F.nvars()) - 1;
    if (n + 1 - F.degree() > 0) continue;
    const HypersurfaceContext ctx(n, F.degree());
    REQUIRE(betti_to_table(ctx, mf_betti(F)).total() == rho_of_mf(F));
    REQUIRE(rho_of_mf(F) == 2 * F.rank());
  }
}

TEST_CASE("dual_table examples") {
  CohomologyTable t(3);
  t.add(0, 0, 2);
  const CohomologyTable d = dual_table(k3, t);
  CHECK(d.at(3, 2) == 2);
  CHECK(d.total() == 2);
  CHECK(dual_table(k3, d) == t);
  CHECK_THROWS_AS(dual_table(k3, betti_to_table(k3, betti_of({{0, 2, 2}}))), DomainError);

  Rng rng(6);
  std::uniform_int_distribution<int> pp(0, 3), hh(0, 2);
  for (int k = 0; k < 50; ++k) {
    CohomologyTable r(3);
    for (int c = 0; c < 5; ++c) r.add(pp(rng), hh(rng), 1 + c);
    REQUIRE(dual_table(k3, dual_table(k3, r)) == r);
    REQUIRE(dual_table(k3, r).total() == r.total());
  }
}

TEST_CASE("phi0_residue examples") {
  CHECK(phi0_residue(k3, 0) == Phi0Descriptor{false, 0, 0, 2});
  CHECK(phi0_residue(k3, -2) == Phi0Descriptor{false, 2, -2, 0});
  CHECK(phi0_residue(HypersurfaceContext(3, 5), 0).zero);
  CHECK_THROWS_AS(phi0_residue(HypersurfaceContext(2, 2), 0), DomainError);

  for (int d = 4; d <= 8; ++d) {
    const HypersurfaceContext ctx(3, d);
    for (int l = -20; l <= 20; ++l) {
      Phi0Descriptor next = phi0_residue(ctx, l + d);
      const Phi0Descriptor here = phi0_residue(ctx, l);
      REQUIRE(next.zero == here.zero);
      if (here.zero) continue;
      REQUIRE(0 <= here.exterior_power);
      REQUIRE(here.exterior_power <= 3);
      next.shift -= 2;
      REQUIRE(next == here);
    }
  }
}

TEST_CASE("shamash examples") {
  for (int n = 1; n <= 6; ++n)
    for (int d = 2; d <= 8; ++d) {
      CHECK(shamash_degrees(n, d, 0) == std::vector<DegreeCount>{{0, 1}});
      CHECK(shamash_degrees(n, d, -1) == std::vector<DegreeCount>{{1, static_cast<Count>(n + 1)}});
      const auto m2 = shamash_degrees(n, d, -2);
      if (d == 2) {
        CHECK(m2 == std::vector<DegreeCount>{{2, static_cast<Count>(pascal(n + 1, 2) + 1)}});
      } else {
        CHECK(m2 == std::vector<DegreeCount>{{2, static_cast<Count>(pascal(n + 1, 2))}, {d, 1}});
      }
    }
  const auto m3 = shamash_degrees(3, 4, -3);
  CHECK(m3 == std::vector<DegreeCount>{{3, 4}, {5, 4}});
  CHECK(shamash_multiset(3, 4, -2) == DegreeMultiset{2, 2, 2, 2, 2, 2, 4});
  CHECK_THROWS_AS(shamash_degrees(3, 4, 1), DomainError);
}

TEST_CASE("check_bgs examples") {
  const Field Qi = Field::gaussian_rationals();
  const MatrixFactorization fermat = mf_fermat(Qi, 2, 2);
  BgsVerdict v = check_bgs(k3, fermat);
  CHECK_FALSE(v.trivial);
  CHECK(v.pass);
  CHECK(v.rank == 2);
  CHECK(v.bound == 2);

  v = check_bgs(k3, mf_trivial_unit_second(fermat.f()));
  CHECK(v.trivial);

  const MatrixFactorization one = mf_fermat(Qi, 1, 2);
  v = check_bgs(HypersurfaceContext(4, 5), one);
  CHECK_FALSE(v.trivial);
  CHECK_FALSE(v.pass);
  CHECK(v.rank == 1);
  CHECK(v.bound == 4);
}

TEST_CASE("check_rho examples") {
  RhoVerdict v = check_rho(k3, 4);
  CHECK(v.pass);
  CHECK(v.bound == 4);
  v = check_rho(HypersurfaceContext(2, 3), rho_point(2));
  CHECK(v.pass);
  CHECK(check_rho(k3, 3).pass == false);
  try {
    check_rho(HypersurfaceContext(2, 2), 2);
    FAIL("expected rejection");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("Fano") != std::string::npos);
  }
}
