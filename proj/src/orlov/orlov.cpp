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

#include "mfkit/orlov.hpp"

#include <algorithm>

#include "mfkit/error.hpp"

namespace mfkit {

namespace {

const char* kModule = "orlov";

void require_non_fano(const HypersurfaceContext& ctx) {
  if (ctx.a() > 0)
    throw DomainError(kModule, "needs a = n + 1 - d <= 0, got a = " + std::to_string(ctx.a()) + " (n = " +
                                   std::to_string(ctx.n()) + ", d = " + std::to_string(ctx.d()) + ")");
}

// Floor division for d > 0.
int floor_div(int x, int d) { return x >= 0 ? x / d : -((-x + d - 1) / d); }

Count pow2(int k) {
  if (k < 0 || k > 63) throw DomainError(kModule, "2^" + std::to_string(k) + " out of range");
  return Count{1} << k;
}

}  // namespace

HypersurfaceContext::HypersurfaceContext(int n, int d) : n_(n), d_(d) {
  if (n < 1) throw DomainError(kModule, "n must be >= 1");
  if (d < 1) throw DomainError(kModule, "d must be >= 1");
}

void CohomologyTable::add(int p, int h, Count count) {
  if (count == 0) return;
  entries_[{p, h}] += count;
}

Count CohomologyTable::at(int p, int h) const {
  auto it = entries_.find({p, h});
  return it == entries_.end() ? 0 : it->second;
}

Count CohomologyTable::total() const {
  Count sum = 0;
  for (const auto& [key, count] : entries_) sum += count;
  return sum;
}

std::vector<std::string> CohomologyTable::diagnostics() const {
  std::vector<std::string> out;
  for (const auto& [key, count] : entries_) {
    const auto [p, h] = key;
    if (in_support(p, h)) continue;
    std::string why = p < 0 || p > n_ ? "p outside [0, " + std::to_string(n_) + "]"
                                      : "h outside [0, " + std::to_string(n_ - 1) + "]";
    out.push_back("out-of-support entry (p=" + std::to_string(p) + ", h=" + std::to_string(h) +
                  ") = " + std::to_string(count) + ": " + why);
  }
  return out;
}

EuclidSplit euclid_split(const HypersurfaceContext& ctx, int j) {
  const int x = ctx.a() - j;
  // q = ceil(x / d), r = q d - x.
  const int q = -floor_div(-x, ctx.d());
  return {q, q * ctx.d() - x};
}

CohomologyTable betti_to_table(const HypersurfaceContext& ctx, const BettiTable& betti) {
  require_non_fano(ctx);
  CohomologyTable table(ctx.n());
  for (const auto& [key, count] : betti.entries()) {
    const auto [i, j] = key;
    const EuclidSplit s = euclid_split(ctx, j);
    const int p = s.r + ctx.a();
    table.add(p, p - 2 * s.q - i + 1, count);
  }
  return table;
}

BettiTable table_to_betti(const HypersurfaceContext& ctx, const CohomologyTable& table) {
  require_non_fano(ctx);
  if (table.n() != ctx.n()) throw MismatchError(kModule, "table dimension differs from context n");
  BettiTable betti;
  for (const auto& [key, count] : table.entries()) {
    const auto [p, h] = key;
    const int r = p - ctx.a();
    if (r < 0 || r >= ctx.d())
      throw DomainError(kModule, "entry (p=" + std::to_string(p) + ", h=" + std::to_string(h) +
                                     ") is not in the image of the Betti translation (need a <= p < a + d)");
    const int parity = p + 1 - h;
    const int i = ((parity % 2) + 2) % 2;
    const int q = (parity - i) / 2;
    betti.add(i, ctx.a() - q * ctx.d() + r, count);
  }
  return betti;
}

Count rho_of_table(const CohomologyTable& table) { return table.total(); }

Count rho_of_mf(const MatrixFactorization& F) {
  if (!mf_is_reduced(F)) throw DomainError(kModule, "rho of a factorization needs a reduced input");
  return 2 * static_cast<Count>(F.rank());
}

CohomologyTable dual_table(const HypersurfaceContext& ctx, const CohomologyTable& table) {
  require_non_fano(ctx);
  if (table.n() != ctx.n()) throw MismatchError(kModule, "table dimension differs from context n");
  const auto diagnostics = table.diagnostics();
  if (!diagnostics.empty()) throw DomainError(kModule, "cannot dualize: " + diagnostics.front());
  CohomologyTable out(ctx.n());
  for (const auto& [key, count] : table.entries()) out.add(ctx.n() - key.first, ctx.n() - 1 - key.second, count);
  return out;
}

Phi0Descriptor phi0_residue(const HypersurfaceContext& ctx, int l) {
  require_non_fano(ctx);
  // l = q d - r, 0 <= r < d; the normalized twist is l0 = -r.
  const int q = -floor_div(-l, ctx.d());
  const int r = q * ctx.d() - l;
  const int a = ctx.a();
  if (-r > a) return {};
  return {false, r + a, -r - a, 2 * q + ctx.n() - r - a - 1};
}

std::vector<DegreeCount> shamash_degrees(int n, int d, int m) {
  if (m > 0) throw DomainError(kModule, "Shamash term index m must be <= 0");
  if (n < 1 || d < 1) throw DomainError(kModule, "need n >= 1 and d >= 1");
  std::map<int, Count> merged;
  for (int j = 0; 2 * j <= -m; ++j) {
    const int s = -m - 2 * j;
    if (s > n + 1) continue;
    merged[s + j * d] += binom(n + 1, s);
  }
  std::vector<DegreeCount> out;
  for (const auto& [degree, mult] : merged) out.push_back({degree, mult});
  return out;
}

DegreeMultiset shamash_multiset(int n, int d, int m) {
  std::vector<int> degrees;
  for (const DegreeCount& dc : shamash_degrees(n, d, m)) degrees.insert(degrees.end(), dc.multiplicity, dc.degree);
  return DegreeMultiset(std::move(degrees));
}

BgsVerdict check_bgs(const HypersurfaceContext& ctx, const MatrixFactorization& F) {
  BgsVerdict v;
  v.rank = F.rank();
  v.reduced_rank = mf_reduce(F).rank();
  v.bound = pow2(ctx.e());
  v.trivial = v.reduced_rank == 0;
  v.pass = !v.trivial && v.reduced_rank >= v.bound;
  return v;
}

RhoVerdict check_rho(const HypersurfaceContext& ctx, Count value) {
  if (ctx.a() > 0)
    throw DomainError(kModule, "the bound rho >= 2^(e+1) is only posed for a <= 0; here a = " +
                                   std::to_string(ctx.a()) +
                                   " (Fano hypersurface, where it fails: e.g. rho(O_X(-1)) = 2 for a line in P^2)");
  RhoVerdict v;
  v.value = value;
  v.bound = pow2(ctx.e() + 1);
  v.pass = value >= v.bound;
  return v;
}

}  // namespace mfkit
