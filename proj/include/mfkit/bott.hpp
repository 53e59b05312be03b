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
#include <vector>

namespace mfkit {

using Count = std::uint64_t;

// binom(x, k) with binom = 0 whenever k < 0 or x < k. Throws DomainError
// if the value does not fit in 64 bits.
Count binom(long x, long k);

// q -> h^q for q in [0, n].
class CohomologyVector {
 public:
  explicit CohomologyVector(int n) : n_(n), values_(static_cast<std::size_t>(n + 1), 0) {}

  int n() const noexcept { return n_; }
  Count operator[](int q) const { return q < 0 || q > n_ ? 0 : values_[static_cast<std::size_t>(q)]; }
  void set(int q, Count value) { values_.at(static_cast<std::size_t>(q)) = value; }
  Count total() const;
  long long euler_characteristic() const;
  int nonzero_count() const;

  friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;

 private:
  int n_;
  std::vector<Count> values_;
};

// h^q(P^n, Omega^p(l)); zero when p or q is outside [0, n].
Count bott(int n, int p, int q, int l);
CohomologyVector bott_vector(int n, int p, int l);

// q -> h^q(P^n, O_X (x) Omega^r(r + t)) for a degree-d hypersurface X, read
// off the long exact sequence of 0 -> Omega^r(r+t-d) -> Omega^r(r+t) -> ... -> 0.
// Multiplication by f is injective on H^0 and surjective on H^n.
CohomologyVector restricted_bott(int n, int d, int r, int t);

// 1 + sum_r binom(d, d-r) binom(d-r-1, n-r); requires a = n + 1 - d <= 0.
Count rho_structure_sheaf(int n, int d);
// sum_r binom(n, r) = 2^n.
Count rho_point(int n);
// sum over r and q of restricted_bott(n, d, r, j).
Count rho_line_bundle(int n, int d, int j);

}  // namespace mfkit
