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

// Independent reference computations. Nothing here calls into the library's
// combinatorics (binom, bott, ...), so tests comparing against these check
// the implementation along a separate route.

#include <cstdint>
#include <functional>
#include <vector>

namespace mfkit::testing {

// Pascal's triangle; pascal(x, k) = 0 outside 0 <= k <= x.
inline std::int64_t pascal(long x, long k) {
  if (k < 0 || x < 0 || k > x) return 0;
  static std::vector<std::vector<std::int64_t>> rows{{1}};
  while (static_cast<long>(rows.size()) <= x) {
    const auto& prev = rows.back();
    std::vector<std::int64_t> row(prev.size() + 1, 1);
    for (std::size_t i = 1; i < prev.size(); ++i) row[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)];
}

// Number of monomials of the given degree in `vars` variables, by enumeration.
inline std::int64_t count_monomials(int vars, int degree) {
  std::function<std::int64_t(int, int)> go = [&](int v, int left) -> std::int64_t {
    if (v == 1) return 1;
    std::int64_t total = 0;
    for (int e = 0; e <= left; ++e) total += go(v - 1, left - e);
    return total;
  };
  return degree < 0 ? 0 : go(vars, degree);
}

// chi(P^n, O(m)) = (m+1)(m+2)...(m+n)/n!, valid for every integer m.
inline std::int64_t chi_line_bundle(int n, long m) {
  __extension__ typedef __int128 wide;
  wide num = 1, den = 1;
  for (int k = 1; k <= n; ++k) {
    num *= (m + k);
    den *= k;
  }
  return static_cast<std::int64_t>(num / den);
}

// chi(P^n, Omega^p(l)) from the Euler sequence: twisting
// 0 -> Omega^p -> wedge^p O(-1)^(n+1) -> Omega^(p-1) -> 0 by l gives
// chi(Omega^p(l)) = binom(n+1, p) chi(O(l - p)) - chi(Omega^(p-1)(l)), which
// unrolls to sum_{i=0}^p (-1)^(p-i) binom(n+1, i) chi(O(l - i)).
inline std::int64_t chi_twisted_forms(int n, int p, long l) {
  std::int64_t chi = 0;
  for (int i = 0; i <= p; ++i) {
    const std::int64_t term = pascal(n + 1, i) * chi_line_bundle(n, l - i);
    chi += ((p - i) % 2 == 0) ? term : -term;
  }
  return chi;
}

}  // namespace mfkit::testing
