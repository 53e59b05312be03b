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
#include <string>
#include <utility>
#include <vector>

#include "mfkit/bott.hpp"
#include "mfkit/graded.hpp"
#include "mfkit/mf.hpp"

namespace mfkit {

// A degree-d hypersurface X in P^n; a and e are derived on demand.
class HypersurfaceContext {
 public:
  HypersurfaceContext(int n, int d);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  int a() const noexcept { return n_ + 1 - d_; }
  int e() const noexcept { return n_ / 2; }

  friend bool operator==(const HypersurfaceContext&, const HypersurfaceContext&) = default;

 private:
  int n_;
  int d_;
};

// Beilinson E1 table: (p, h) -> h^h(P^n, i_*C (x) Omega^p(p)). Entries with
// p outside [0, n] or h outside [0, n-1] are kept and flagged.
class CohomologyTable {
 public:
  explicit CohomologyTable(int n) : n_(n) {}

  int n() const noexcept { return n_; }
  void add(int p, int h, Count count);
  Count at(int p, int h) const;
  Count total() const;
  bool empty() const noexcept { return entries_.empty(); }
  bool in_support(int p, int h) const noexcept { return p >= 0 && p <= n_ && h >= 0 && h <= n_ - 1; }
  const std::map<std::pair<int, int>, Count>& entries() const noexcept { return entries_; }
  // One message per out-of-support cell, in (p, h) order.
  std::vector<std::string> diagnostics() const;

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

 private:
  int n_;
  std::map<std::pair<int, int>, Count> entries_;
};

struct EuclidSplit {
  int q;
  int r;
};

// a - j = q d - r with 0 <= r < d.
EuclidSplit euclid_split(const HypersurfaceContext& ctx, int j);

// b^i_j lands at p = r + a, h = r + a - 2q - i + 1. Requires a <= 0.
CohomologyTable betti_to_table(const HypersurfaceContext& ctx, const BettiTable& betti);
// Inverse index map: r = p - a, i = (p + 1 - h) mod 2, q = (p + 1 - h - i) / 2,
// j = a - q d + r. Requires a <= 0 and a <= p < a + d for every entry.
BettiTable table_to_betti(const HypersurfaceContext& ctx, const CohomologyTable& table);

Count rho_of_table(const CohomologyTable& table);
// rank(F0) + rank(F1) of a reduced factorization.
Count rho_of_mf(const MatrixFactorization& F);

// (p, h) -> (n - p, n - 1 - h). Rejects out-of-support entries.
CohomologyTable dual_table(const HypersurfaceContext& ctx, const CohomologyTable& table);

// i^*(wedge^p T)(twist)[shift], or zero.
struct Phi0Descriptor {
  bool zero = true;
  int exterior_power = 0;
  int twist = 0;
  int shift = 0;

  friend bool operator==(const Phi0Descriptor&, const Phi0Descriptor&) = default;
};

Phi0Descriptor phi0_residue(const HypersurfaceContext& ctx, int l);

// Generator degrees of the cohomological degree-m term of the Shamash
// resolution of k: degree s + j d with multiplicity binom(n+1, s) for
// s + 2j = -m, j >= 0, 0 <= s <= n + 1. Sorted by degree, equal degrees merged.
struct DegreeCount {
  int degree;
  Count multiplicity;

  friend bool operator==(const DegreeCount&, const DegreeCount&) = default;
};
std::vector<DegreeCount> shamash_degrees(int n, int d, int m);
DegreeMultiset shamash_multiset(int n, int d, int m);

struct BgsVerdict {
  std::size_t rank = 0;
  std::size_t reduced_rank = 0;
  Count bound = 0;  // 2^e
  bool trivial = false;
  // Meaningful only when !trivial.
  bool pass = false;
};

// rank(F0) >= 2^e, judged on the reduced part; trivial factorizations are
// outside the scope of the bound.
BgsVerdict check_bgs(const HypersurfaceContext& ctx, const MatrixFactorization& F);

struct RhoVerdict {
  Count value = 0;
  Count bound = 0;  // 2^(e+1)
  bool pass = false;
};

// value >= 2^(e+1). Throws DomainError when a > 0: the bound fails for
// Fano hypersurfaces (e.g. rho(O_X(-1)) = 2 for a hyperplane in P^2).
RhoVerdict check_rho(const HypersurfaceContext& ctx, Count value);

inline const std::vector<std::string>& unchecked_hypotheses() {
  static const std::vector<std::string> kList = {"f irreducible (not verified)", "X = V(f) smooth (not verified)"};
  return kList;
}

}  // namespace mfkit
