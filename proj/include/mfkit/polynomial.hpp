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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mfkit/scalar.hpp"

namespace mfkit {

using Exponent = std::uint32_t;

// Exponent vector over x0..x{n-1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  // Throws DomainError if an exponent would overflow.
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

// Graded lexicographic order with x0 > x1 > ... > x{n-1}.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

struct DegreeInfo {
  // nullopt encodes the degree -infinity of the zero polynomial.
  std::optional<int> degree;
  bool homogeneous = true;
};

// Sparse polynomial in canonical form: terms strictly decreasing in grlex,
// no zero coefficients. Two equal polynomials have identical term lists.
class Polynomial {
 public:
  Polynomial(Field field, std::size_t nvars);

  static Polynomial constant(Field field, std::size_t nvars, const Scalar& value);
  static Polynomial variable(Field field, std::size_t nvars, std::size_t index);
  static Polynomial from_terms(Field field, std::size_t nvars, std::vector<Term> terms);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  DegreeInfo degree_info() const;
  // Zero, or homogeneous of exactly this degree. Negative degrees admit only zero.
  bool is_homogeneous_of_degree(long degree) const;
  // Coefficient of the monomial 1.
  Scalar constant_term() const;

  Polynomial pow(unsigned exponent) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Canonical text form; parse_polynomial(to_string()) reproduces the value.
  std::string to_string() const;

 private:
  void canonicalize();

  Field field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

// Throws MismatchError unless both polynomials live in the same ring.
void require_same_ring(const Polynomial& a, const Polynomial& b);

// Parses the expression grammar: integers, rational literals a/b, the token i
// (Q(i) only), variables x0..x{nvars-1}, + - * ^ and parentheses.
Polynomial parse_polynomial(std::string_view text, const Field& field, std::size_t nvars);

}  // namespace mfkit
