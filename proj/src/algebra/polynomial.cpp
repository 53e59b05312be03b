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

#include "mfkit/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "mfkit/error.hpp"

namespace mfkit {

namespace {

const char* kModule = "algebra";

struct TermRender {
  bool negative = false;
  std::string body;  // empty when the coefficient is +-1
};

TermRender render_coefficient(const Scalar& c) {
  return std::visit(
      [](const auto& v) -> TermRender {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          mpq_class mag = abs(v);
          return {v < 0, mag == 1 ? std::string() : mag.get_str()};
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          if (v.im == 0) {
            mpq_class mag = abs(v.re);
            return {v.re < 0, mag == 1 ? std::string() : mag.get_str()};
          }
          mpq_class im_mag = abs(v.im);
          std::string im = im_mag == 1 ? std::string("i") : im_mag.get_str() + "*i";
          if (v.re == 0) return {v.im < 0, im};
          return {false, "(" + v.re.get_str() + (v.im < 0 ? " - " : " + ") + im + ")"};
        } else {
          return {false, v.value == 1 ? std::string() : std::to_string(v.value)};
        }
      },
      c.storage());
}

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t total = 0;
  for (Exponent e : exps_) total += e;
  return total;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    std::uint64_t e = std::uint64_t{a.exps_[i]} + b.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw DomainError(kModule, "exponent overflow");
    out.exps_[i] = static_cast<Exponent>(e);
  }
  return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

Polynomial Polynomial::constant(Field field, std::size_t nvars, const Scalar& value) {
  Polynomial p(field, nvars);
  if (!value.is_zero()) p.terms_.push_back({Monomial(nvars), value});
  return p;
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DomainError(kModule, "variable index out of range");
  Polynomial p(field, nvars);
  p.terms_.push_back({Monomial::variable(nvars, index), field.one()});
  return p;
}

Polynomial Polynomial::from_terms(Field field, std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(field, nvars);
  for (const Term& t : terms) {
    if (t.monomial.nvars() != nvars) throw MismatchError(kModule, "term arity does not match the ring");
    if (!(t.coefficient.field() == field)) throw MismatchError(kModule, "term coefficient field does not match");
  }
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return grlex_compare(a.monomial, b.monomial) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial)
      merged.back().coefficient += t.coefficient;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient.is_zero(); });
  terms_ = std::move(merged);
}

DegreeInfo Polynomial::degree_info() const {
  if (terms_.empty()) return {std::nullopt, true};
  // Leading term has the top degree in grlex.
  const auto top = terms_.front().monomial.degree();
  bool homogeneous = terms_.back().monomial.degree() == top;
  return {static_cast<int>(top), homogeneous};
}

bool Polynomial::is_homogeneous_of_degree(long degree) const {
  if (terms_.empty()) return true;
  if (degree < 0) return false;
  const auto info = degree_info();
  return info.homogeneous && *info.degree == degree;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return field_.zero();
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(field_, nvars_, field_.one());
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field()))
    throw MismatchError(kModule, "field mismatch (" + a.field().name() + " vs " + b.field().name() + ")");
  if (a.nvars() != b.nvars())
    throw MismatchError(kModule, "variable count mismatch (" + std::to_string(a.nvars()) + " vs " +
                                     std::to_string(b.nvars()) + ")");
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial out(a.field_, a.nvars_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    auto c = grlex_compare(i->monomial, j->monomial);
    if (c > 0) {
      out.terms_.push_back(*i++);
    } else if (c < 0) {
      out.terms_.push_back(*j++);
    } else {
      Scalar sum = i->coefficient + j->coefficient;
      if (!sum.is_zero()) out.terms_.push_back({i->monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  out.terms_.insert(out.terms_.end(), i, a.terms_.end());
  out.terms_.insert(out.terms_.end(), j, b.terms_.end());
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial out(a.field_, a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) out.terms_.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  out.canonicalize();
  return out;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  if (!(c.field() == p.field())) throw MismatchError(kModule, "scalar field does not match polynomial field");
  Polynomial out(p.field_, p.nvars_);
  if (c.is_zero()) return out;
  out.terms_.reserve(p.terms_.size());
  for (const Term& t : p.terms_) out.terms_.push_back({t.monomial, c * t.coefficient});
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].monomial == b.terms_[k].monomial) || !(a.terms_[k].coefficient == b.terms_[k].coefficient))
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    TermRender r = render_coefficient(t.coefficient);
    std::string mono = render_monomial(t.monomial);
    std::string piece;
    if (mono.empty())
      piece = r.body.empty() ? "1" : r.body;
    else
      piece = r.body.empty() ? mono : r.body + "*" + mono;
    if (first)
      out += (r.negative ? "-" : "") + piece;
    else
      out += (r.negative ? " - " : " + ") + piece;
    first = false;
  }
  return out;
}

}  // namespace mfkit
