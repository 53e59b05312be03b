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

#include <cctype>
#include <string>

#include "mfkit/error.hpp"
#include "mfkit/polynomial.hpp"

namespace mfkit {

namespace {

constexpr unsigned long kMaxExponentLiteral = 65535;

class Parser {
 public:
  Parser(std::string_view text, const Field& field, std::size_t nvars)
      : text_(text), field_(field), nvars_(nvars) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial result = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    mpz_class e = integer_literal("exponent");
    if (e > kMaxExponentLiteral) {
      pos_ = start;
      fail("exponent overflow (limit " + std::to_string(kMaxExponentLiteral) + ")");
    }
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  mpz_class integer_literal(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer_literal("integer");
      mpz_class den = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        den = integer_literal("denominator");
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      try {
        return Polynomial::constant(field_, nvars_, field_.from_fraction(num, den));
      } catch (const DomainError& e) {
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view ident = text_.substr(start, pos_ - start);
      if (ident == "i") {
        if (field_.kind() != FieldKind::GaussianRational) {
          pos_ = start;
          fail("'i' is only available over Qi (field is " + field_.name() + ")");
        }
        return Polynomial::constant(field_, nvars_, field_.sqrt_minus_one());
      }
      if (ident.size() > 1 && ident[0] == 'x' &&
          ident.find_first_not_of("0123456789", 1) == std::string_view::npos) {
        const std::string digits(ident.substr(1));
        if (digits.size() < 10) {
          const unsigned long index = std::stoul(digits);
          if (index < nvars_) return Polynomial::variable(field_, nvars_, index);
        }
      }
      pos_ = start;
      fail("unknown variable '" + std::string(ident) + "' (ring has x0..x" +
           std::to_string(nvars_ == 0 ? 0 : nvars_ - 1) + ")");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  Field field_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Field& field, std::size_t nvars) {
  return Parser(text, field, nvars).parse();
}

}  // namespace mfkit
