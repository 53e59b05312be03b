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
#include "mfkit/error.hpp"
#include "mfkit/polynomial.hpp"
#include "mfkit/random.hpp"

using namespace mfkit;
using mfkit::fuzz::random_homogeneous;
using mfkit::fuzz::random_polynomial;
using mfkit::fuzz::Rng;

namespace {

const Field Q = Field::rationals();
const Field Qi = Field::gaussian_rationals();
const Field F13 = Field::prime(13);

}  // namespace

TEST_CASE("fields") {
  CHECK_THROWS_AS(Field::prime(15), DomainError);
  CHECK_THROWS_AS(Field::prime(1), DomainError);
  CHECK_THROWS_AS(Field::prime(kMaxPrimeModulus + 2), DomainError);
  CHECK(Field::prime(kMaxPrimeModulus).modulus() == kMaxPrimeModulus);  // 2^31 - 1 is prime

  const Scalar i = Qi.sqrt_minus_one();
  CHECK((i * i).is_minus_one());
  for (std::uint64_t p : {5ULL, 13ULL, 17ULL, 29ULL, 2147483629ULL}) {
    if (!is_prime(p)) continue;
    const Field F = Field::prime(p);
    CHECK((F.sqrt_minus_one() * F.sqrt_minus_one()).is_minus_one());
  }
  CHECK_FALSE(Field::prime(7).has_sqrt_minus_one());
  CHECK_THROWS_AS(Q.sqrt_minus_one(), DomainError);

  // Largest residues multiply without overflow.
  const Field big = Field::prime(kMaxPrimeModulus);
  const Scalar m1 = -big.one();
  CHECK((m1 * m1).is_one());
  CHECK((big.from_integer(12345) / big.from_integer(12345)).is_one());

  CHECK(Q.from_fraction(6, -4) == Q.from_fraction(-3, 2));
  CHECK(Q.from_fraction(6, -4).to_string() == "-3/2");
  CHECK_THROWS_AS(F13.from_fraction(1, 26), DomainError);
}

TEST_CASE("parse_poly examples") {
  const Polynomial f = parse_polynomial("x0^4 + x1^4", Q, 2);
  CHECK(f.terms().size() == 2);
  CHECK(f.degree_info().degree == 4);
  CHECK(f.to_string() == "x0^4 + x1^4");

  const Polynomial g = parse_polynomial("(x0^2 + i*x1^2)*(x0^2 - i*x1^2)", Qi, 2);
  CHECK(g == parse_polynomial("x0^4 + x1^4", Qi, 2));

  const Polynomial z = parse_polynomial("x0 - x0", Q, 1);
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
  CHECK(z.to_string() == "0");
}

TEST_CASE("parse_poly grammar details") {
  CHECK(parse_polynomial("-x0^2", Q, 1).to_string() == "-x0^2");
  CHECK(parse_polynomial("3/6*x0*x1 - 1/2*x1*x0", Q, 2).is_zero());
  CHECK(parse_polynomial("2^3", Q, 1) == Polynomial::constant(Q, 1, Q.from_integer(8)));
  CHECK(parse_polynomial("(x0 + x1)^2", Q, 2).to_string() == "x0^2 + 2*x0*x1 + x1^2");
  CHECK(parse_polynomial("x1 + x0", Q, 2).to_string() == "x0 + x1");
  CHECK(parse_polynomial("x0^0", Q, 1).to_string() == "1");
  CHECK(parse_polynomial("  + x0  ", Q, 1).to_string() == "x0");
  CHECK(parse_polynomial("i*i", Qi, 0).to_string() == "-1");
  CHECK(parse_polynomial("(1/2 - 3*i)*x0 + i*x1 - x2", Qi, 3).to_string() == "(1/2 - 3*i)*x0 + i*x1 - x2");
  CHECK(parse_polynomial("-2*i*x0", Qi, 1).to_string() == "-2*i*x0");
  CHECK(parse_polynomial("1/2*x0 - 1", F13, 1).to_string() == "7*x0 + 12");
  // Monomial order: degree first, then lex with x0 > x1.
  CHECK(parse_polynomial("x1^2 + x0*x2 + x0 + x0^2", Q, 3).to_string() == "x0^2 + x0*x2 + x1^2 + x0");
}

TEST_CASE("parse_poly errors") {
  auto error_at = [](std::string_view text, const Field& field, std::size_t nvars) -> std::size_t {
    try {
      parse_polynomial(text, field, nvars);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error for " << text);
    return 0;
  };
  CHECK(error_at("x0 +", Q, 1) == 4);
  CHECK(error_at("x0 ** 2", Q, 1) == 4);
  CHECK(error_at("(x0", Q, 1) == 3);
  CHECK(error_at("", Q, 1) == 0);
  CHECK(error_at("x0 x1", Q, 2) == 3);
  CHECK(error_at("x0 + x2", Q, 2) == 5);   // unknown variable
  CHECK(error_at("y", Q, 2) == 0);         // unknown variable
  CHECK(error_at("x0 + i", Q, 1) == 5);    // i outside Q(i)
  CHECK(error_at("i", F13, 1) == 0);       // F_p has an i but the token is Q(i)-only
  CHECK(error_at("x0^99999999", Q, 1) == 3);  // exponent overflow
  CHECK(error_at("x0^-1", Q, 1) == 3);
  CHECK(error_at("1/0", Q, 1) == 2);
  try {
    parse_polynomial("x0 + i", Q, 1);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("Qi") != std::string::npos);
  }
}

TEST_CASE("poly_arith examples") {
  const Polynomial x0sq = parse_polynomial("x0^2", Q, 1);
  CHECK((x0sq * x0sq).to_string() == "x0^4");

  const Polynomial a = parse_polynomial("x0^2 + i*x1^2", Qi, 2);
  const Polynomial b = parse_polynomial("x0^2 - i*x1^2", Qi, 2);
  CHECK((a * b).to_string() == "x0^4 + x1^4");

  const Polynomial f = parse_polynomial("x0^4 + 3/2*x0*x1^3", Q, 2);
  CHECK(f + Polynomial(Q, 2) == f);
  CHECK((Q.from_fraction(2, 3) * f).to_string() == "2/3*x0^4 + x0*x1^3");

  CHECK_THROWS_AS(parse_polynomial("x0", Q, 1) + parse_polynomial("x0", Qi, 1), MismatchError);
  CHECK_THROWS_AS(parse_polynomial("x0", Q, 1) * parse_polynomial("x0", Q, 2), MismatchError);
  CHECK_THROWS_AS(Qi.one() * parse_polynomial("x0", Q, 1), MismatchError);
}

TEST_CASE("degree_info examples") {
  auto info = parse_polynomial("x0^4 + x1^4", Q, 2).degree_info();
  CHECK(info.degree == 4);
  CHECK(info.homogeneous);

  info = parse_polynomial("x0^2 + x1", Q, 2).degree_info();
  CHECK(info.degree == 2);
  CHECK_FALSE(info.homogeneous);

  info = Polynomial(Q, 2).degree_info();
  CHECK_FALSE(info.degree.has_value());
  CHECK(info.homogeneous);
  CHECK(Polynomial(Q, 2).is_homogeneous_of_degree(-3));
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(20261017);
  for (const Field& field : {Q, Qi, F13, Field::prime(kMaxPrimeModulus)}) {
    CAPTURE(field.name());
    for (int k = 0; k < 1000; ++k) {
      const Polynomial a = random_polynomial(field, 3, rng);
      const Polynomial b = random_polynomial(field, 3, rng);
      const Polynomial c = random_polynomial(field, 3, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a - a).is_zero());
      // Canonical-form stability.
      const Polynomial p = a * b + c;
      REQUIRE(Polynomial::from_terms(field, 3, {p.terms().begin(), p.terms().end()}) == p);
    }
  }
}

TEST_CASE("gaussian norm identity") {
  Rng rng(7);
  const Polynomial i = Polynomial::constant(Qi, 3, Qi.sqrt_minus_one());
  for (int k = 0; k < 200; ++k) {
    const int deg = std::uniform_int_distribution<int>(0, 3)(rng);
    const Polynomial a = random_homogeneous(Qi, 3, deg, rng);
    const Polynomial b = random_homogeneous(Qi, 3, deg, rng);
    REQUIRE((a + i * b) * (a - i * b) == a * a + b * b);
  }
}

TEST_CASE("print/parse round trip") {
  Rng rng(99);
  for (const Field& field : {Q, Qi, F13}) {
    for (int k = 0; k < 300; ++k) {
      const Polynomial p = random_polynomial(field, 3, rng);
      const std::string text = p.to_string();
      const Polynomial back = parse_polynomial(text, field, 3);
      REQUIRE(back == p);
      REQUIRE(back.to_string() == text);
    }
  }
}
