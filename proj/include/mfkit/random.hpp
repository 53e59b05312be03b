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

#include <random>
#include <vector>

#include "mfkit/graded.hpp"
#include "mfkit/mf.hpp"
#include "mfkit/polynomial.hpp"

// Random valid inputs, shared by `mfkit mf fuzz` and the test suites.
namespace mfkit::fuzz {

using Rng = std::mt19937_64;

inline Scalar random_scalar(const Field& field, Rng& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> small(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  for (;;) {
    Scalar s = field.zero();
    switch (field.kind()) {
      case FieldKind::Rational:
        s = field.from_fraction(small(rng), den(rng));
        break;
      case FieldKind::GaussianRational:
        s = field.from_fraction(small(rng), den(rng)) + field.from_fraction(small(rng), den(rng)) * field.sqrt_minus_one();
        break;
      case FieldKind::Prime: {
        std::uniform_int_distribution<std::uint64_t> res(0, field.modulus() - 1);
        s = Scalar(res(rng), field.modulus());
        break;
      }
    }
    if (!nonzero || !s.is_zero()) return s;
  }
}

inline Monomial random_monomial(std::size_t nvars, int degree, Rng& rng, std::size_t first_var = 0,
                                std::size_t var_count = 0) {
  if (var_count == 0) var_count = nvars - first_var;
  std::vector<Exponent> exps(nvars, 0);
  std::uniform_int_distribution<std::size_t> pick(first_var, first_var + var_count - 1);
  for (int k = 0; k < degree; ++k) ++exps[pick(rng)];
  return Monomial(std::move(exps));
}

// Homogeneous of the given degree (zero if degree < 0), with up to
// `max_terms` terms in variables [first_var, first_var + var_count).
inline Polynomial random_homogeneous(const Field& field, std::size_t nvars, int degree, Rng& rng,
                                     int max_terms = 3, bool nonzero = false, std::size_t first_var = 0,
                                     std::size_t var_count = 0) {
  if (degree < 0) return Polynomial(field, nvars);
  std::uniform_int_distribution<int> terms(1, max_terms);
  for (;;) {
    std::vector<Term> list;
    const int count = terms(rng);
    for (int k = 0; k < count; ++k)
      list.push_back({random_monomial(nvars, degree, rng, first_var, var_count), random_scalar(field, rng)});
    Polynomial p = Polynomial::from_terms(field, nvars, std::move(list));
    if (!nonzero || !p.is_zero()) return p;
  }
}

inline Polynomial random_polynomial(const Field& field, std::size_t nvars, Rng& rng, int max_degree = 3,
                                    int max_terms = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::vector<Term> list;
  const int count = terms(rng);
  for (int k = 0; k < count; ++k) list.push_back({random_monomial(nvars, deg(rng), rng), random_scalar(field, rng)});
  return Polynomial::from_terms(field, nvars, std::move(list));
}

// Rank-1 factorization (a, b) of f = a b with deg a = k, F1 = {twist}.
inline MatrixFactorization elementary_pair(const Polynomial& a, const Polynomial& b, int twist = 0) {
  const int k = *a.degree_info().degree;
  return mf_make({a * b, {k + twist}, {twist}, {{a}}, {{b}}});
}

// Conjugates F by random elementary base changes on F0 and F1; the result
// is isomorphic to F but has its structure mixed up.
inline MatrixFactorization random_gauge(const MatrixFactorization& F, Rng& rng, int steps = 4) {
  const std::size_t n = F.rank();
  if (n < 2) return F;
  MfCandidate c = mf_to_candidate(F);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::bernoulli_distribution side(0.5);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    if (side(rng)) {
      // F1: row_i(s0) += alpha row_j(s0); col_j(s1) -= alpha col_i(s1).
      const Polynomial alpha =
          random_homogeneous(F.field(), F.nvars(), c.f1_degrees[j] - c.f1_degrees[i], rng, 2, false);
      if (alpha.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) c.s0[i][k] = c.s0[i][k] + alpha * c.s0[j][k];
      for (std::size_t k = 0; k < n; ++k) c.s1[k][j] = c.s1[k][j] - c.s1[k][i] * alpha;
    } else {
      // F0: row_i(s1) += beta row_j(s1); col_j(s0) -= beta col_i(s0).
      const Polynomial beta =
          random_homogeneous(F.field(), F.nvars(), c.f0_degrees[j] - c.f0_degrees[i], rng, 2, false);
      if (beta.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) c.s1[i][k] = c.s1[i][k] + beta * c.s1[j][k];
      for (std::size_t k = 0; k < n; ++k) c.s0[k][j] = c.s0[k][j] - c.s0[k][i] * beta;
    }
  }
  return mf_make(c);
}

// A random valid factorization of a random f: a direct sum of rank-1 pieces
// (a_k, b_k) with a_k b_k = f, tensored-in structure when `tensor` is set,
// then gauged.
inline MatrixFactorization random_factorization(const Field& field, Rng& rng, bool allow_units = true) {
  const std::size_t nvars = 4;
  std::uniform_int_distribution<int> deg(2, 4);
  std::uniform_int_distribution<int> twist(-3, 3);
  std::uniform_int_distribution<int> pieces(1, 3);
  const int d = deg(rng);
  std::uniform_int_distribution<int> split(allow_units ? 0 : 1, allow_units ? d : d - 1);
  const int k0 = std::uniform_int_distribution<int>(1, d - 1)(rng);
  Polynomial a = random_homogeneous(field, nvars, k0, rng, 2, true, 0, 2);
  Polynomial b = random_homogeneous(field, nvars, d - k0, rng, 2, true, 0, 2);
  Polynomial c = random_homogeneous(field, nvars, k0, rng, 2, true, 2, 2);
  Polynomial e = random_homogeneous(field, nvars, d - k0, rng, 2, true, 2, 2);
  // f = ab + ce has a rank-2 factorization built by tensoring (a, b) with (c, e).
  MatrixFactorization F = mf_tensor(elementary_pair(a, b), elementary_pair(c, e));
  const Polynomial& f = F.f();
  const int extra = pieces(rng) - 1;
  for (int k = 0; k < extra; ++k) {
    const int s = split(rng);
    if (s == 0)
      F = mf_direct_sum(F, mf_trivial_unit_first(f, twist(rng)));
    else if (s == d)
      F = mf_direct_sum(F, mf_trivial_unit_second(f, twist(rng)));
    else
      F = mf_direct_sum(F, mf_twist(mf_tensor(elementary_pair(a, b), elementary_pair(c, e)), twist(rng)));
  }
  return random_gauge(mf_twist(F, twist(rng)), rng);
}

}  // namespace mfkit::fuzz
