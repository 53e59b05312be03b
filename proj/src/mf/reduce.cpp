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

#include <optional>

#include "internal.hpp"
#include "mfkit/mf.hpp"

namespace mfkit {

namespace {

struct Pivot {
  bool in_s0;
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> find_unit(const RawMf& raw) {
  const std::size_t n = raw.f0.size();
  for (std::size_t k = 0; k < n * n; ++k)
    if (!raw.s0[k].constant_term().is_zero()) return Pivot{true, k / n, k % n};
  for (std::size_t k = 0; k < n * n; ++k)
    if (!raw.s1[k].constant_term().is_zero()) return Pivot{false, k / n, k % n};
  return std::nullopt;
}

// Schur complement of the n x n matrix m at the unit pivot (pr, pc).
std::vector<Polynomial> schur_complement(const std::vector<Polynomial>& m, std::size_t n, std::size_t pr,
                                         std::size_t pc) {
  const Scalar inv = m[pr * n + pc].constant_term().inverse();
  std::vector<Polynomial> out;
  out.reserve((n - 1) * (n - 1));
  for (std::size_t r = 0; r < n; ++r) {
    if (r == pr) continue;
    const Polynomial scaled = inv * m[r * n + pc];
    for (std::size_t c = 0; c < n; ++c) {
      if (c == pc) continue;
      const Polynomial& top = m[pr * n + c];
      out.push_back(scaled.is_zero() || top.is_zero() ? m[r * n + c] : m[r * n + c] - scaled * top);
    }
  }
  return out;
}

std::vector<Polynomial> without(const std::vector<Polynomial>& m, std::size_t n, std::size_t dr, std::size_t dc) {
  std::vector<Polynomial> out;
  out.reserve((n - 1) * (n - 1));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != dr && c != dc) out.push_back(m[r * n + c]);
  return out;
}

}  // namespace

// A unit u at (r, c) of s0 means the pivot is a constant, so the pivot entry is
// homogeneous of degree 0. Row and column operations clear its row and
// column in s0 (a Schur complement); the compensating operations on s1 only
// touch the row and column that are then deleted, so s1 loses that row and
// column unchanged. The symmetric statement holds for a pivot in s1.
ReduceResult mf_reduce_counted(const MatrixFactorization& F) {
  RawMf raw = to_raw(F);
  std::size_t splits = 0;
  while (auto pivot = find_unit(raw)) {
    const std::size_t n = raw.f0.size();
    if (pivot->in_s0) {
      // s0 rows index F1, columns index F0.
      raw.s1 = without(raw.s1, n, pivot->col, pivot->row);
      raw.s0 = schur_complement(raw.s0, n, pivot->row, pivot->col);
      raw.f1.erase(raw.f1.begin() + static_cast<std::ptrdiff_t>(pivot->row));
      raw.f0.erase(raw.f0.begin() + static_cast<std::ptrdiff_t>(pivot->col));
    } else {
      // s1 rows index F0, columns index F1.
      raw.s0 = without(raw.s0, n, pivot->col, pivot->row);
      raw.s1 = schur_complement(raw.s1, n, pivot->row, pivot->col);
      raw.f0.erase(raw.f0.begin() + static_cast<std::ptrdiff_t>(pivot->row));
      raw.f1.erase(raw.f1.begin() + static_cast<std::ptrdiff_t>(pivot->col));
    }
    ++splits;
  }
  if (splits == 0) return {F, 0};
  return {assemble_sorted(std::move(raw)), splits};
}

MatrixFactorization mf_reduce(const MatrixFactorization& F) { return mf_reduce_counted(F).value; }

}  // namespace mfkit
