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

#include <algorithm>

#include "doctest.h"
#include "mfkit/mf.hpp"
#include "mfkit/random.hpp"

using namespace mfkit;
using mfkit::fuzz::elementary_pair;
using mfkit::fuzz::random_factorization;
using mfkit::fuzz::Rng;

namespace {

const Field Qi = Field::gaussian_rationals();
const Field F13 = Field::prime(13);

Polynomial P(std::string_view text, std::size_t nvars = 4, const Field& field = Qi) {
  return parse_polynomial(text, field, nvars);
}

void require_valid(const MatrixFactorization& F) {
  const Diagnostics diags = mf_check(F);
  INFO((diags.empty() ? std::string() : diags.front().to_string()));
  REQUIRE(diags.empty());
}

}  // namespace

TEST_CASE("mf_validate examples") {
  const Polynomial f = P("x0^4 + x1^4", 2);
  CHECK(mf_validate({f, {0}, {0}, {{P("1", 2)}}, {{f}}}).ok());

  const MfValidation pair = mf_validate({f, {2}, {0}, {{P("x0^2 + i*x1^2", 2)}}, {{P("x0^2 - i*x1^2", 2)}}});
  REQUIRE(pair.ok());
  CHECK(pair.value->rank() == 1);
  CHECK(pair.value->degree() == 4);

  const MfValidation bad = mf_validate({P("x0^4", 1), {1}, {0}, {{P("x0", 1)}}, {{P("x0", 1)}}});
  CHECK_FALSE(bad.ok());
  REQUIRE(!bad.diagnostics.empty());
  const auto composite = std::find_if(bad.diagnostics.begin(), bad.diagnostics.end(),
                                      [](const Diagnostic& dg) { return dg.location == "s1*s0 entry (0,0)"; });
  REQUIRE(composite != bad.diagnostics.end());
  CHECK(composite->message.find("is x0^2, expected f") != std::string::npos);
}

TEST_CASE("mf_validate rejections") {
  const Polynomial f = P("x0^4 + x1^4", 2);
  CHECK_FALSE(mf_validate({P("x0^4 + x1", 2), {0}, {0}, {{P("1", 2)}}, {{f}}}).ok());
  CHECK_FALSE(mf_validate({P("0", 2), {0}, {0}, {{P("1", 2)}}, {{P("0", 2)}}}).ok());
  CHECK_FALSE(mf_validate({f, {0, 0}, {0}, {{P("1", 2), P("0", 2)}}, {{f}, {P("0", 2)}}}).ok());
  // Wrong degree list for s1's entry.
  CHECK_FALSE(mf_validate({f, {1}, {0}, {{P("1", 2)}}, {{f}}}).ok());
  CHECK_THROWS_AS(mf_make({f, {1}, {0}, {{P("1", 2)}}, {{f}}}), ValidationError);
  // Unsorted degree lists are accepted and sorted with the matrices.
  const MfCandidate mixed{f, {4, 0}, {0, 4}, {{P("1", 2), P("0", 2)}, {P("0", 2), f}},
                          {{f, P("0", 2)}, {P("0", 2), P("1", 2)}}};
  CHECK_FALSE(mf_validate(mixed).ok());
  const MfCandidate mixed_ok{f, {4, 0}, {0, 0}, {{P("0", 2), P("1", 2)}, {f, P("0", 2)}},
                             {{P("0", 2), P("1", 2)}, {f, P("0", 2)}}};
  const MfValidation sorted = mf_validate(mixed_ok);
  REQUIRE(sorted.ok());
  CHECK(sorted.value->f0() == DegreeMultiset{0, 4});
  CHECK(presentation_equivalent(*sorted.value,
                                mf_direct_sum(mf_trivial_unit_first(f), mf_trivial_unit_second(f))));
}

TEST_CASE("shift and twist examples") {
  const Polynomial f = P("x0^4 + x1^4", 2);
  const MatrixFactorization unit = mf_trivial_unit_first(f);
  const MatrixFactorization shifted = mf_shift(unit);
  require_valid(shifted);
  CHECK(shifted.f0() == DegreeMultiset{0});
  CHECK(shifted.f1() == DegreeMultiset{-4});
  CHECK(shifted.s0().at(0, 0) == -f);
  CHECK(shifted.s1().at(0, 0) == P("-1", 2));

  const MatrixFactorization fermat = mf_fermat(Qi, 2, 2);
  CHECK(mf_shift(mf_shift(fermat)) == mf_twist(fermat, 4));
  CHECK(mf_twist(fermat, 0) == fermat);
  CHECK(mf_twist(mf_twist(fermat, 3), -3) == fermat);

  const BettiTable base = mf_betti(fermat);
  const BettiTable twisted = mf_betti(mf_twist(fermat, 1));
  for (int i = 0; i < 2; ++i)
    for (int j = -3; j < 6; ++j) CHECK(twisted.at(i, j) == base.at(i, j + 1));
  CHECK(twisted.at(0, 1) == 2);
  CHECK(twisted.at(1, -1) == 2);
}

TEST_CASE("direct sum examples") {
  const Polynomial f = P("x0^4 + x1^4", 2);
  const MatrixFactorization F = mf_fermat(Qi, 1, 2);
  CHECK(mf_direct_sum(F, mf_zero(f)) == F);
  const MatrixFactorization both = mf_direct_sum(mf_trivial_unit_first(f), mf_trivial_unit_second(f));
  require_valid(both);
  CHECK(both.rank() == 2);
  CHECK(mf_direct_sum(F, both).rank() == 3);
  CHECK_THROWS_AS(mf_direct_sum(F, mf_trivial_unit_first(P("x0^4", 2))), MismatchError);
}

TEST_CASE("tensor examples") {
  const MatrixFactorization F = elementary_pair(P("x0^2", 3), P("x0^2", 3));
  const MatrixFactorization G = elementary_pair(P("x1^2 + i*x2^2", 3), P("x1^2 - i*x2^2", 3));
  const MatrixFactorization T = mf_tensor(F, G);
  require_valid(T);
  CHECK(T.rank() == 2);
  CHECK(T.f() == P("x0^4 + x1^4 + x2^4", 3));

  const MatrixFactorization A = elementary_pair(P("x0^2 + i*x1^2"), P("x0^2 - i*x1^2"));
  const MatrixFactorization B = elementary_pair(P("x2^2 + i*x3^2"), P("x2^2 - i*x3^2"));
  const MatrixFactorization AB = mf_tensor(A, B, Normalize::Yes);
  CHECK(AB.f0() == DegreeMultiset{2, 2});
  CHECK(AB.f1() == DegreeMultiset{0, 0});
  CHECK(AB.f() == P("x0^4 + x1^4 + x2^4 + x3^4"));

  for (int t = 1; t <= 4; ++t) CHECK(mf_fermat(Qi, t, 2).rank() == (std::size_t{1} << (t - 1)));

  CHECK_THROWS_AS(mf_tensor(A, elementary_pair(P("x2"), P("x2"))), MismatchError);
  CHECK_THROWS_AS(mf_tensor(A, elementary_pair(P("-x0^2 - i*x1^2"), P("x0^2 - i*x1^2"))), DomainError);
}

TEST_CASE("dual examples") {
  const Polynomial f = P("x0^4 + x1^4", 2);
  const MatrixFactorization d = mf_dual(mf_trivial_unit_first(f));
  require_valid(d);
  CHECK(d.rank() == 1);
  CHECK_FALSE(mf_is_reduced(d));

  const MatrixFactorization fermat = mf_fermat(Qi, 2, 2);
  const MatrixFactorization fd = mf_dual(fermat);
  require_valid(fd);
  CHECK(fd.f() == fermat.f());
  CHECK(fd.rank() == fermat.rank());
  CHECK(presentation_equivalent(mf_dual(fd), mf_normalize(fermat)));

  Rng rng(3);
  for (int k = 0; k < 30; ++k) {
    const MatrixFactorization F = random_factorization(F13, rng);
    const MatrixFactorization D = mf_dual(F);
    require_valid(D);
    REQUIRE(D.rank() == F.rank());
    REQUIRE(presentation_equivalent(mf_dual(D), mf_normalize(F)));
  }
}

TEST_CASE("reduced and reduce examples") {
  const Polynomial f = P("x0^4 + x1^4 + x2^4 + x3^4");
  const MatrixFactorization fermat = mf_fermat(Qi, 2, 2);
  CHECK_FALSE(mf_is_reduced(mf_trivial_unit_first(f)));
  CHECK(mf_is_reduced(fermat));
  CHECK(mf_is_reduced(mf_zero(f)));

  const ReduceResult one = mf_reduce_counted(mf_direct_sum(fermat, mf_trivial_unit_first(f)));
  CHECK(one.splits == 1);
  CHECK(one.value.rank() == fermat.rank());
  CHECK(mf_betti(one.value) == mf_betti(fermat));

  CHECK(mf_reduce(fermat) == fermat);
  const MatrixFactorization none = mf_reduce(mf_direct_sum(mf_trivial_unit_first(f), mf_trivial_unit_second(f)));
  CHECK(none.rank() == 0);
  require_valid(none);
}

TEST_CASE("reduce on gauged sums") {
  Rng rng(8);
  for (int k = 0; k < 60; ++k) {
    const MatrixFactorization F = random_factorization(F13, rng);
    const ReduceResult r = mf_reduce_counted(F);
    require_valid(r.value);
    REQUIRE(mf_is_reduced(r.value));
    REQUIRE(r.value.rank() + r.splits == F.rank());
    REQUIRE(mf_reduce(r.value) == r.value);
    REQUIRE(mf_betti(r.value).total() == 2 * r.value.rank());
  }
}

TEST_CASE("fermat examples") {
  const MatrixFactorization one = mf_fermat(Qi, 1, 2);
  CHECK(one.rank() == 1);
  CHECK(one.f() == P("x0^4 + x1^4", 2));
  CHECK(one.s0().at(0, 0) == P("x0^2 + i*x1^2", 2));
  CHECK(one.s1().at(0, 0) == P("x0^2 - i*x1^2", 2));

  const MatrixFactorization two = mf_fermat(Qi, 2, 2);
  require_valid(two);
  CHECK(mf_is_reduced(two));
  const BettiTable b = mf_betti(two);
  CHECK(b.at(1, 0) == 2);
  CHECK(b.at(0, 2) == 2);
  CHECK(b.total() == 4);

  CHECK(mf_fermat(Qi, 3, 2).rank() == 4);
  const MatrixFactorization solo = mf_fermat(Field::prime(13), 2, 1, true);
  require_valid(solo);
  CHECK(solo.rank() == 4);
  CHECK(solo.f() == P("x0^2 + x1^2 + x2^2 + x3^2 + x4^2", 5, Field::prime(13)));
  CHECK(solo.f1() == DegreeMultiset{0, 0, 0, 0});

  CHECK_THROWS_AS(mf_fermat(Field::rationals(), 1, 2), DomainError);
  CHECK_THROWS_AS(mf_fermat(Field::prime(7), 1, 2), DomainError);
  CHECK_THROWS_AS(mf_fermat(Qi, 0, 2), DomainError);
  CHECK_THROWS_AS(mf_fermat(Qi, 1, 0), DomainError);
}

TEST_CASE("betti examples") {
  const Polynomial f = P("x0^4 + x1^4", 2);
  CHECK(mf_betti(mf_zero(f)).empty());
  CHECK_THROWS_AS(mf_betti(mf_trivial_unit_first(f)), DomainError);
}

TEST_CASE("constructors validate on random inputs") {
  Rng rng(21);
  for (int k = 0; k < 40; ++k) {
    const MatrixFactorization F = random_factorization(F13, rng);
    const MatrixFactorization G = random_factorization(F13, rng);
    require_valid(F);
    require_valid(mf_shift(F));
    REQUIRE(mf_shift(F).rank() == F.rank());
    REQUIRE(mf_shift(mf_shift(F)) == mf_twist(F, F.degree()));
    require_valid(mf_twist(F, k % 5 - 2));
    require_valid(mf_normalize(F));
    if (F.f() == G.f()) require_valid(mf_direct_sum(F, G));
  }
}

TEST_CASE("presentation equivalence") {
  const MatrixFactorization two = mf_fermat(Qi, 2, 2);
  CHECK(presentation_equivalent(two, two));
  CHECK_FALSE(presentation_equivalent(two, mf_twist(two, 1)));
  CHECK_FALSE(presentation_equivalent(two, mf_shift(two)));
}
