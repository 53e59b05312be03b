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

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mfkit/error.hpp"
#include "mfkit/graded.hpp"
#include "mfkit/polynomial.hpp"

namespace mfkit {

// Unvalidated tuple (F0, F1, s0, s1) as read from a file or assembled by
// hand. Degree lists may be in any order. s0 is rank(F1) x rank(F0) and maps
// F0 -> F1; s1 is rank(F0) x rank(F1) and maps F1(-d) -> F0.
struct MfCandidate {
  Polynomial f;
  std::vector<int> f0_degrees;
  std::vector<int> f1_degrees;
  std::vector<std::vector<Polynomial>> s0;
  std::vector<std::vector<Polynomial>> s1;
};

// A validated graded matrix factorization of a homogeneous f of degree d >= 1:
// s1 s0 = f on F0 and s0 s1 = f on F1. s0 has source F0 and target F1; s1 has
// source F1 twisted by -d (degrees + d) and target F0. Degree lists are kept
// sorted, with the matrices permuted to match.
class MatrixFactorization {
 public:
  const Polynomial& f() const noexcept { return f_; }
  int degree() const noexcept { return d_; }
  const Field& field() const noexcept { return f_.field(); }
  std::size_t nvars() const noexcept { return f_.nvars(); }
  const DegreeMultiset& f0() const noexcept { return s0_.source(); }
  const DegreeMultiset& f1() const noexcept { return s0_.target(); }
  const HomogeneousMatrix& s0() const noexcept { return s0_; }
  const HomogeneousMatrix& s1() const noexcept { return s1_; }
  // rank(F0) == rank(F1).
  std::size_t rank() const noexcept { return s0_.cols(); }

  friend bool operator==(const MatrixFactorization&, const MatrixFactorization&) = default;

 private:
  MatrixFactorization(Polynomial f, int d, HomogeneousMatrix s0, HomogeneousMatrix s1)
      : f_(std::move(f)), d_(d), s0_(std::move(s0)), s1_(std::move(s1)) {}

  friend struct MfAccess;

  Polynomial f_;
  int d_;
  HomogeneousMatrix s0_;
  HomogeneousMatrix s1_;
};

struct MfValidation {
  std::optional<MatrixFactorization> value;
  Diagnostics diagnostics;

  bool ok() const noexcept { return value.has_value(); }
};

MfValidation mf_validate(const MfCandidate& candidate);
// mf_validate, throwing ValidationError on failure.
MatrixFactorization mf_make(const MfCandidate& candidate);
// Re-checks every invariant of an existing value; empty iff valid.
Diagnostics mf_check(const MatrixFactorization& F);
MfCandidate mf_to_candidate(const MatrixFactorization& F);

// (Q, Q, 1, f) with F0 = F1 = {twist}.
MatrixFactorization mf_trivial_unit_first(const Polynomial& f, int twist = 0);
// (Q, Q, f, 1) with F0 = {d + twist}, F1 = {twist}.
MatrixFactorization mf_trivial_unit_second(const Polynomial& f, int twist = 0);
MatrixFactorization mf_zero(const Polynomial& f);

// F[1] = (F1, F0(d), -s1, -s0).
MatrixFactorization mf_shift(const MatrixFactorization& F);
// F(t) = (F0(t), F1(t), s0, s1).
MatrixFactorization mf_twist(const MatrixFactorization& F, int t);
// Twist making the smallest degree of F1 equal to 0 (identity on rank 0).
MatrixFactorization mf_normalize(const MatrixFactorization& F);
MatrixFactorization mf_direct_sum(const MatrixFactorization& F, const MatrixFactorization& G);

enum class Normalize { No, Yes };

// Factorization of f + g with
//   T0 = F0(x)G0 + (F1(x)G1)(-d),  T1 = F1(x)G0 + F0(x)G1,
//   s0 = [[s0 x 1, 1 x t1], [1 x t0, -s1 x 1]],
//   s1 = [[s1 x 1, 1 x t1], [1 x t0, -s0 x 1]].
MatrixFactorization mf_tensor(const MatrixFactorization& F, const MatrixFactorization& G,
                              Normalize normalize = Normalize::No);

// (F1^*, F0^*, s0^T, s1^T) with degrees negated, then normalized so the
// smallest F1 degree is 0. mf_dual(mf_dual(F)) is presentation-equivalent
// to mf_normalize(F).
MatrixFactorization mf_dual(const MatrixFactorization& F);

// No entry of s0 or s1 has a nonzero constant term.
bool mf_is_reduced(const MatrixFactorization& F);

struct ReduceResult {
  MatrixFactorization value;
  std::size_t splits = 0;
};

// Splits off rank-1 trivial summands until the factorization is reduced.
// Pivots are taken in s0 then s1, row-major, first unit entry first.
ReduceResult mf_reduce_counted(const MatrixFactorization& F);
MatrixFactorization mf_reduce(const MatrixFactorization& F);

// Tensor product of `pairs` factors (x^m + i y^m, x^m - i y^m) of x^2m + y^2m
// in fresh variables, plus one (x^m, x^m) factor when `solo` is set,
// normalized so F1 = {0, ..., 0}. Factorizes sum_k x_k^(2m).
MatrixFactorization mf_fermat(const Field& field, int pairs, int half_degree, bool solo = false);

// b^i_j for i in {0, 1}: the number of degree-j generators of F^i.
class BettiTable {
 public:
  void add(int i, int j, std::uint64_t count);
  std::uint64_t at(int i, int j) const;
  std::uint64_t total() const;
  bool empty() const noexcept { return entries_.empty(); }
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const noexcept { return entries_; }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

// Throws DomainError if F is not reduced.
BettiTable mf_betti(const MatrixFactorization& F);

// Equal up to reordering generators of equal degree within F0 and within F1.
bool presentation_equivalent(const MatrixFactorization& F, const MatrixFactorization& G);

}  // namespace mfkit
