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

#include "mfkit/scalar.hpp"

#include "mfkit/error.hpp"

namespace mfkit {

namespace {

const char* kModule = "algebra";

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

[[noreturn]] void field_mismatch() { throw MismatchError(kModule, "scalar field mismatch"); }

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > kMaxPrimeModulus)
    throw DomainError(kModule, "modulus " + std::to_string(p) + " exceeds the supported bound " +
                                   std::to_string(kMaxPrimeModulus));
  if (!is_prime(p)) throw DomainError(kModule, "modulus " + std::to_string(p) + " is not prime");
  return Field(FieldKind::Prime, p);
}

bool Field::has_sqrt_minus_one() const noexcept {
  switch (kind_) {
    case FieldKind::GaussianRational:
      return true;
    case FieldKind::Prime:
      return modulus_ == 2 || modulus_ % 4 == 1;
    default:
      return false;
  }
}

Scalar Field::zero() const { return from_integer(0L); }
Scalar Field::one() const { return from_integer(1L); }

Scalar Field::from_integer(long value) const { return from_integer(mpz_class(value)); }

Scalar Field::from_integer(const mpz_class& value) const {
  switch (kind_) {
    case FieldKind::Rational:
      return Scalar(mpq_class(value));
    case FieldKind::GaussianRational:
      return Scalar(mpq_class(value), mpq_class(0));
    case FieldKind::Prime:
      return Scalar(reduce_mod(value, modulus_), modulus_);
  }
  throw DomainError(kModule, "unknown field kind");
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (kind_ == FieldKind::Prime) {
    Scalar d = from_integer(den);
    if (d.is_zero()) throw DomainError(kModule, "denominator vanishes modulo " + std::to_string(modulus_));
    return from_integer(num) / d;
  }
  if (den == 0) throw DomainError(kModule, "division by zero");
  mpq_class q(num, den);
  q.canonicalize();
  return kind_ == FieldKind::Rational ? Scalar(q) : Scalar(q, mpq_class(0));
}

Scalar Field::sqrt_minus_one() const {
  if (kind_ == FieldKind::GaussianRational) return Scalar(mpq_class(0), mpq_class(1));
  if (!has_sqrt_minus_one()) throw DomainError(kModule, "field " + name() + " has no square root of -1");
  const std::uint64_t p = modulus_;
  if (p == 2) return Scalar(1, 2);
  // A quadratic non-residue c gives c^((p-1)/4) with square -1.
  for (std::uint64_t c = 2; c < p; ++c) {
    if (mod_pow(c, (p - 1) / 2, p) == p - 1) {
      std::uint64_t root = mod_pow(c, (p - 1) / 4, p);
      return Scalar(std::min(root, p - root), p);
    }
  }
  throw DomainError(kModule, "no quadratic non-residue found");
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::Rational:
      return "Q";
    case FieldKind::GaussianRational:
      return "Qi";
    case FieldKind::Prime:
      return "F" + std::to_string(modulus_);
  }
  return "?";
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {}

Scalar::Scalar(mpq_class re, mpq_class im) : value_(Gaussian{std::move(re), std::move(im)}) {}

Scalar::Scalar(std::uint64_t value, std::uint64_t modulus) : value_(Residue{value % modulus, modulus}) {}


Field Scalar::field() const {
  if (std::holds_alternative<mpq_class>(value_)) return Field::rationals();
  if (std::holds_alternative<Gaussian>(value_)) return Field::gaussian_rationals();
  return Field(FieldKind::Prime, std::get<Residue>(value_).modulus);
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>)
          return v == 0;
        else if constexpr (std::is_same_v<T, Gaussian>)
          return v.re == 0 && v.im == 0;
        else
          return v.value == 0;
      },
      value_);
}

bool Scalar::is_one() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>)
          return v == 1;
        else if constexpr (std::is_same_v<T, Gaussian>)
          return v.re == 1 && v.im == 0;
        else
          return v.value == 1 % v.modulus;
      },
      value_);
}

bool Scalar::is_minus_one() const { return (-*this).is_one(); }

Scalar Scalar::operator-() const {
  return std::visit(
      [](const auto& v) -> Scalar {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>)
          return Scalar(mpq_class(-v));
        else if constexpr (std::is_same_v<T, Gaussian>)
          return Scalar(mpq_class(-v.re), mpq_class(-v.im));
        else
          return Scalar((v.modulus - v.value) % v.modulus, v.modulus);
      },
      value_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) field_mismatch();
  return std::visit(
      [&b](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.value_);
        if constexpr (std::is_same_v<T, mpq_class>) {
          return Scalar(mpq_class(x + y));
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          return Scalar(mpq_class(x.re + y.re), mpq_class(x.im + y.im));
        } else {
          if (x.modulus != y.modulus) field_mismatch();
          return Scalar((x.value + y.value) % x.modulus, x.modulus);
        }
      },
      a.value_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) field_mismatch();
  return std::visit(
      [&b](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.value_);
        if constexpr (std::is_same_v<T, mpq_class>) {
          return Scalar(mpq_class(x * y));
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          return Scalar(mpq_class(x.re * y.re - x.im * y.im), mpq_class(x.re * y.im + x.im * y.re));
        } else {
          if (x.modulus != y.modulus) field_mismatch();
          return Scalar(x.value * y.value % x.modulus, x.modulus);
        }
      },
      a.value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError(kModule, "division by zero");
  return std::visit(
      [](const auto& v) -> Scalar {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          return Scalar(mpq_class(1 / v));
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          mpq_class norm = v.re * v.re + v.im * v.im;
          return Scalar(mpq_class(v.re / norm), mpq_class(-v.im / norm));
        } else {
          return Scalar(mod_pow(v.value, v.modulus - 2, v.modulus), v.modulus);
        }
      },
      value_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.value_);
        if constexpr (std::is_same_v<T, mpq_class>)
          return x == y;
        else if constexpr (std::is_same_v<T, Gaussian>)
          return x.re == y.re && x.im == y.im;
        else
          return x.value == y.value && x.modulus == y.modulus;
      },
      a.value_);
}

std::string Scalar::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          return rational_string(v);
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          if (v.im == 0) return rational_string(v.re);
          std::string im_abs = abs(v.im) == 1 ? std::string("i") : rational_string(abs(v.im)) + "*i";
          if (v.re == 0) return v.im < 0 ? "-" + im_abs : im_abs;
          return "(" + rational_string(v.re) + (v.im < 0 ? " - " : " + ") + im_abs + ")";
        } else {
          return std::to_string(v.value);
        }
      },
      value_);
}

}  // namespace mfkit
