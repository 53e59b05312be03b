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

#include "doctest.h"
#include "mfkit/graded.hpp"
#include "mfkit/random.hpp"

using namespace mfkit;
using mfkit::fuzz::random_homogeneous;
using mfkit::fuzz::Rng;

namespace {

const Field Q = Field::rationals();
const Field Qi = Field::gaussian_rationals();

Polynomial P(std::string_view text, const Field& field = Qi, std::size_t nvars = 4) {
  return parse_polynomial(text, field, nvars);
}

DegreeMultiset random_degrees(Rng& rng, std::size_t rank, int lo, int hi) {
  std::uniform_int_distribution<int> pick(lo, hi);
  std::vector<int> out(rank);
  for (int& x : out) x = pick(rng);
  return DegreeMultiset(out);
}

HomogeneousMatrix random_matrix(const Field& field, const DegreeMultiset& source, const DegreeMultiset& target,
                                Rng& rng) {
  std::vector<Polynomial> entries;
  for (std::size_t r = 0; r < target.rank(); ++r)
    for (std::size_t c = 0; c < source.rank(); ++c)
      entries.push_back(random_homogeneous(field, 3, source[c] - target[r], rng, 2));
  return HomogeneousMatrix(field, 3, source, target, std::move(entries));
}

}  // namespace

TEST_CASE("degree multisets") {
  const DegreeMultiset d{2, 0, 2};
  CHECK(d.rank() == 3);
  CHECK(std::vector<int>(d.begin(), d.end()) == std::vector<int>{0, 2, 2});
  CHECK(d.count(2) == 2);
  CHECK(multiset_twist({0, 2}, 2) == DegreeMultiset{-2, 0});
  CHECK(multiset_twist({5}, 0) == DegreeMultiset{5});
  CHECK(multiset_twist(multiset_twist(d, 7), -7) == d);
  CHECK(sorting_permutation(std::vector<int>{3, 1, 3, 0}) == std::vector<std::size_t>{3, 1, 0, 2});
}

TEST_CASE("matrix_validate examples") {
  const HomogeneousMatrix ok(Qi, 4, {2}, {0}, {P("x0^2")});
  CHECK(matrix_validate(ok).empty());

  const HomogeneousMatrix bad(Qi, 4, {2}, {0}, {P("x0")});
  const Diagnostics diags = matrix_validate(bad);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].location == "entry (0,0)");
  CHECK(diags[0].message.find("homogeneous of degree 2") != std::string::npos);

  // s0 block of the two-pair Fermat tensor product.
  const HomogeneousMatrix block(Qi, 4, {2, 2}, {0, 0},
                                {P("x0^2 + i*x1^2"), P("-(x2^2 - i*x3^2)"), P("x2^2 + i*x3^2"), P("x0^2 - i*x1^2")});
  CHECK(matrix_validate(block).empty());

  // Negative required degree forces a zero entry.
  const HomogeneousMatrix neg(Qi, 4, {0}, {1}, {P("1")});
  CHECK(matrix_validate(neg).size() == 1);
  CHECK(matrix_validate(HomogeneousMatrix(Qi, 4, {0}, {1}, {P("0")})).empty());

  // Entries from another ring are reported.
  const HomogeneousMatrix ring(Qi, 4, {1}, {0}, {parse_polynomial("x0", Q, 4)});
  CHECK(matrix_validate(ring).size() == 1);

  CHECK_THROWS_AS(HomogeneousMatrix(Qi, 4, {1, 1}, {0}, {P("x0")}), MismatchError);
}

TEST_CASE("matrix_compose examples") {
  const HomogeneousMatrix m(Qi, 4, {2, 3}, {0, 1}, {P("x0^2"), P("x1^3"), P("x2"), P("x3^2")});
  CHECK(matrix_compose(HomogeneousMatrix::identity(Qi, 4, {0, 1}), m) == m);

  const HomogeneousMatrix a(Qi, 4, {2}, {0}, {P("x0^2 + i*x1^2")});
  const HomogeneousMatrix b(Qi, 4, {4}, {2}, {P("x0^2 - i*x1^2")});
  const HomogeneousMatrix ab = matrix_compose(a, b);
  CHECK(ab.source() == DegreeMultiset{4});
  CHECK(ab.target() == DegreeMultiset{0});
  CHECK(ab.at(0, 0) == P("x0^4 + x1^4"));

  const HomogeneousMatrix z = HomogeneousMatrix::zero(Qi, 4, {0, 1}, {-1});
  CHECK(matrix_compose(z, m).is_zero());
  CHECK(matrix_compose(z, m).source() == m.source());

  CHECK_THROWS_AS(matrix_compose(a, a), MismatchError);
}

TEST_CASE("composition of valid matrices is valid and associative") {
  Rng rng(11);
  std::uniform_int_distribution<std::size_t> rank(0, 3);
  for (int k = 0; k < 150; ++k) {
    const DegreeMultiset d0 = random_degrees(rng, rank(rng), 0, 2);
    const DegreeMultiset d1 = random_degrees(rng, rank(rng), 1, 3);
    const DegreeMultiset d2 = random_degrees(rng, rank(rng), 2, 4);
    const DegreeMultiset d3 = random_degrees(rng, rank(rng), 3, 5);
    const HomogeneousMatrix a = random_matrix(Q, d1, d0, rng);
    const HomogeneousMatrix b = random_matrix(Q, d2, d1, rng);
    const HomogeneousMatrix c = random_matrix(Q, d3, d2, rng);
    REQUIRE(matrix_validate(a).empty());
    const HomogeneousMatrix ab = matrix_compose(a, b);
    REQUIRE(matrix_validate(ab).empty());
    REQUIRE(matrix_compose(ab, c) == matrix_compose(a, matrix_compose(b, c)));
  }
}

TEST_CASE("twisting source and target keeps entries valid") {
  Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const HomogeneousMatrix m = random_matrix(Q, random_degrees(rng, 2, 2, 4), random_degrees(rng, 3, 0, 2), rng);
    const int t = std::uniform_int_distribution<int>(-5, 5)(rng);
    const HomogeneousMatrix tw = m.twisted(t);
    REQUIRE(matrix_validate(tw).empty());
    REQUIRE(std::equal(tw.entries().begin(), tw.entries().end(), m.entries().begin(), m.entries().end()));
    REQUIRE(tw.source() == multiset_twist(m.source(), t));
  }
}
