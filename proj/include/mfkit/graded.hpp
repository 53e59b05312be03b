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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mfkit/error.hpp"
#include "mfkit/polynomial.hpp"

namespace mfkit {

// Generator degrees of a graded free module: the summand S(-m) contributes m.
// Always sorted ascending.
class DegreeMultiset {
 public:
  DegreeMultiset() = default;
  DegreeMultiset(std::initializer_list<int> degrees) : DegreeMultiset(std::vector<int>(degrees)) {}
  explicit DegreeMultiset(std::vector<int> degrees);

  std::size_t rank() const noexcept { return degrees_.size(); }
  bool empty() const noexcept { return degrees_.empty(); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  std::span<const int> degrees() const noexcept { return degrees_; }
  auto begin() const noexcept { return degrees_.begin(); }
  auto end() const noexcept { return degrees_.end(); }

  // M(t): every generator degree m becomes m - t.
  DegreeMultiset twisted(int t) const;
  std::size_t count(int degree) const;

  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;

 private:
  std::vector<int> degrees_;
};

DegreeMultiset multiset_twist(const DegreeMultiset& d, int t);

// Permutation that stably sorts `degrees` ascending: result[k] is the
// original index placed at position k.
std::vector<std::size_t> sorting_permutation(std::span<const int> degrees);

// Polynomial matrix between graded free modules. Columns index the source,
// rows the target; entry (r, c) must be zero or homogeneous of degree
// source[c] - target[r]. Construction checks only the shape; use
// matrix_validate for the degree and ring invariants.
class HomogeneousMatrix {
 public:
  HomogeneousMatrix(Field field, std::size_t nvars, DegreeMultiset source, DegreeMultiset target,
                    std::vector<Polynomial> entries);

  static HomogeneousMatrix zero(Field field, std::size_t nvars, DegreeMultiset source, DegreeMultiset target);
  static HomogeneousMatrix identity(Field field, std::size_t nvars, DegreeMultiset degrees);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const DegreeMultiset& source() const noexcept { return source_; }
  const DegreeMultiset& target() const noexcept { return target_; }
  std::size_t rows() const noexcept { return target_.rank(); }
  std::size_t cols() const noexcept { return source_.rank(); }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  std::span<const Polynomial> entries() const noexcept { return entries_; }

  // Required degree of entry (r, c).
  long expected_degree(std::size_t r, std::size_t c) const {
    return static_cast<long>(source_[c]) - static_cast<long>(target_[r]);
  }

  // Same entries, both degree lists twisted by t.
  HomogeneousMatrix twisted(int t) const;
  HomogeneousMatrix negated() const;
  bool is_zero() const;

  friend bool operator==(const HomogeneousMatrix&, const HomogeneousMatrix&) = default;

 private:
  Field field_;
  std::size_t nvars_;
  DegreeMultiset source_;
  DegreeMultiset target_;
  std::vector<Polynomial> entries_;
};

// One diagnostic per violating entry; empty iff the matrix is valid.
Diagnostics matrix_validate(const HomogeneousMatrix& m);

// A o B (apply B first). Requires A.source == B.target.
HomogeneousMatrix matrix_compose(const HomogeneousMatrix& a, const HomogeneousMatrix& b);

}  // namespace mfkit
