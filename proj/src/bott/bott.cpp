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

#include "mfkit/bott.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mfkit/error.hpp"

namespace mfkit {

namespace {

const char* kModule = "bott";

Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError(kModule, "count overflow");
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError(kModule, "count overflow");
  return out;
}

}  // namespace

Count binom(long x, long k) {
  if (k < 0 || x < k) return 0;
  k = std::min(k, x - k);
  // acc * (x - k + i) is divisible by i; cancel gcd(acc, i) first so the
  // only multiplication that can overflow is a genuine overflow of the result.
  Count acc = 1;
  for (long i = 1; i <= k; ++i) {
    const auto step = static_cast<Count>(x - k + i);
    const Count g = std::gcd(acc, static_cast<Count>(i));
    Count next;
    if (__builtin_mul_overflow(acc / g, step / (static_cast<Count>(i) / g), &next))
      throw DomainError(kModule, "binom(" + std::to_string(x) + ", " + std::to_string(k) + ") overflows");
    acc = next;
  }
  return acc;
}

Count CohomologyVector::total() const {
  Count sum = 0;
  for (Count v : values_) sum = checked_add(sum, v);
  return sum;
}

long long CohomologyVector::euler_characteristic() const {
  long long chi = 0;
  for (int q = 0; q <= n_; ++q) chi += (q % 2 == 0 ? 1 : -1) * static_cast<long long>((*this)[q]);
  return chi;
}

int CohomologyVector::nonzero_count() const {
  int count = 0;
  for (Count v : values_) count += v != 0;
  return count;
}

Count bott(int n, int p, int q, int l) {
  if (p < 0 || p > n || q < 0 || q > n) return 0;
  if (q == 0 && l > p) return checked_mul(binom(l + n - p, l), binom(l - 1, p));
  if (l == 0 && q == p) return 1;
  if (q == n && l < p - n) return checked_mul(binom(p - l, -l), binom(-l - 1, n - p));
  return 0;
}

CohomologyVector bott_vector(int n, int p, int l) {
  if (n < 0) throw DomainError(kModule, "n must be nonnegative");
  CohomologyVector v(n);
  for (int q = 0; q <= n; ++q) v.set(q, bott(n, p, q, l));
  return v;
}

CohomologyVector restricted_bott(int n, int d, int r, int t) {
  if (n < 1) throw DomainError(kModule, "n must be >= 1");
  if (d < 1) throw DomainError(kModule, "d must be >= 1");
  if (r < 0 || r > n) throw DomainError(kModule, "r must lie in [0, n]");
  const CohomologyVector sub = bott_vector(n, r, r + t - d);
  const CohomologyVector mid = bott_vector(n, r, r + t);

  // Rank of H^q(sub) -> H^q(mid), multiplication by f.
  auto map_rank = [&](int q) -> Count {
    if (q < 0 || q > n || sub[q] == 0 || mid[q] == 0) return 0;
    if (q == 0) return sub[q];
    if (q == n) return mid[q];
    throw std::logic_error("bott: both ambient groups nonzero in middle degree " + std::to_string(q));
  };

  CohomologyVector out(n);
  for (int q = 0; q <= n; ++q) {
    const Count coker = mid[q] - map_rank(q);
    const Count ker = q + 1 <= n ? sub[q + 1] - map_rank(q + 1) : 0;
    out.set(q, checked_add(coker, ker));
  }
  if (out[n] != 0) throw std::logic_error("bott: restricted cohomology nonzero in degree n");
  if (out.euler_characteristic() != mid.euler_characteristic() - sub.euler_characteristic())
    throw std::logic_error("bott: Euler characteristic check failed");
  return out;
}

Count rho_structure_sheaf(int n, int d) {
  if (n < 1 || d < 1) throw DomainError(kModule, "need n >= 1 and d >= 1");
  const int a = n + 1 - d;
  if (a > 0)
    throw DomainError(kModule, "closed form for rho(O_X) needs a = n + 1 - d <= 0 (got a = " + std::to_string(a) +
                                   ")");
  Count sum = 1;
  for (int r = 0; r <= n; ++r) sum = checked_add(sum, checked_mul(binom(d, d - r), binom(d - r - 1, n - r)));
  return sum;
}

Count rho_point(int n) {
  if (n < 1) throw DomainError(kModule, "n must be >= 1");
  Count sum = 0;
  for (int r = 0; r <= n; ++r) sum = checked_add(sum, binom(n, r));
  return sum;
}

Count rho_line_bundle(int n, int d, int j) {
  Count sum = 0;
  for (int r = 0; r <= n; ++r) sum = checked_add(sum, restricted_bott(n, d, r, j).total());
  return sum;
}

}  // namespace mfkit
