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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace mfkit {

enum class FieldKind { Rational, GaussianRational, Prime };

// Moduli must stay below this bound so that the product of two residues fits
// in 64 bits with room for a subsequent addition.
inline constexpr std::uint64_t kMaxPrimeModulus = (std::uint64_t{1} << 31) - 1;

class Scalar;

// Descriptor of the coefficient field: Q, Q(i) or F_p.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rational, 0); }
  static Field gaussian_rationals() { return Field(FieldKind::GaussianRational, 0); }
  // Throws DomainError unless p is a prime in [2, kMaxPrimeModulus].
  static Field prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  // True for Q(i) and for F_p with p = 2 or p = 1 mod 4.
  bool has_sqrt_minus_one() const noexcept;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(const mpz_class& value) const;
  Scalar from_integer(long value) const;
  // num/den; throws DomainError when den vanishes in the field.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;
  // The distinguished i of Q(i), or the smallest residue squaring to -1 in F_p.
  Scalar sqrt_minus_one() const;

  // "Q", "Qi" or "F<p>".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  Field(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

struct Gaussian {
  mpq_class re;
  mpq_class im;
};

struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 2;
};

// A field element. Rationals are kept canonical by GMP (lowest terms,
// positive denominator); residues are kept in [0, p).
class Scalar {
 public:
  using Storage = std::variant<mpq_class, Gaussian, Residue>;

  explicit Scalar(mpq_class value);
  Scalar(mpq_class re, mpq_class im);
  Scalar(std::uint64_t value, std::uint64_t modulus);

  Field field() const;
  const Storage& storage() const noexcept { return value_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_minus_one() const;

  Scalar inverse() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  // Standalone rendering: "3/2", "(1/2 - 3*i)", "5" (residue).
  std::string to_string() const;

 private:
  Storage value_;
};

}  // namespace mfkit
