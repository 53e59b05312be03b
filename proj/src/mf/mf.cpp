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

#include "mfkit/mf.hpp"

#include <algorithm>
#include <functional>

#include "internal.hpp"
#include "mfkit/kernels.hpp"

namespace mfkit {

namespace {

const char* kModule = "mf";

std::string cell(std::size_t r, std::size_t c) { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

// Checks one product against f times the identity; reports the first failing entry.
void check_composite(const char* name, const Polynomial& f, const std::vector<Polynomial>& product, std::size_t n,
                     Diagnostics& out) {
  const Polynomial zero(f.field(), f.nvars());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Polynomial& expected = r == c ? f : zero;
      const Polynomial& got = product[r * n + c];
      if (got == expected) continue;
      out.push_back({std::string(name) + " entry " + cell(r, c),
                     "is " + got.to_string() + ", expected " + (r == c ? std::string("f") : std::string("0")) +
                         "; difference from f*delta is " + (got - expected).to_string()});
      return;
    }
}

}  // namespace

Diagnostics composite_diagnostics(const Polynomial& f, std::size_t rank, const std::vector<Polynomial>& s0,
                                  const std::vector<Polynomial>& s1) {
  Diagnostics out;
  const kernels::Shape square{rank, rank};
  check_composite("s1*s0", f, kernels::matmul_parallel(s1, square, s0, square, f.field(), f.nvars()), rank, out);
  check_composite("s0*s1", f, kernels::matmul_parallel(s0, square, s1, square, f.field(), f.nvars()), rank, out);
  return out;
}

RawMf to_raw(const MatrixFactorization& F) {
  RawMf raw{F.f(), F.degree(), {}, {}, {}, {}};
  raw.f0.assign(F.f0().begin(), F.f0().end());
  raw.f1.assign(F.f1().begin(), F.f1().end());
  raw.s0.assign(F.s0().entries().begin(), F.s0().entries().end());
  raw.s1.assign(F.s1().entries().begin(), F.s1().entries().end());
  return raw;
}

MatrixFactorization assemble_sorted(RawMf raw) {
  const std::size_t n0 = raw.f0.size(), n1 = raw.f1.size();
  const auto p0 = sorting_permutation(raw.f0);
  const auto p1 = sorting_permutation(raw.f1);
  std::vector<int> f0(n0), f1(n1), f1_shifted(n1);
  for (std::size_t k = 0; k < n0; ++k) f0[k] = raw.f0[p0[k]];
  for (std::size_t k = 0; k < n1; ++k) {
    f1[k] = raw.f1[p1[k]];
    f1_shifted[k] = f1[k] + raw.d;
  }
  std::vector<Polynomial> s0, s1;
  s0.reserve(n1 * n0);
  s1.reserve(n0 * n1);
  for (std::size_t r = 0; r < n1; ++r)
    for (std::size_t c = 0; c < n0; ++c) s0.push_back(std::move(raw.s0[p1[r] * n0 + p0[c]]));
  for (std::size_t r = 0; r < n0; ++r)
    for (std::size_t c = 0; c < n1; ++c) s1.push_back(std::move(raw.s1[p0[r] * n1 + p1[c]]));
  const Field field = raw.f.field();
  const std::size_t nvars = raw.f.nvars();
  HomogeneousMatrix m0(field, nvars, DegreeMultiset(f0), DegreeMultiset(f1), std::move(s0));
  HomogeneousMatrix m1(field, nvars, DegreeMultiset(f1_shifted), DegreeMultiset(f0), std::move(s1));
  return MfAccess::make(std::move(raw.f), raw.d, std::move(m0), std::move(m1));
}

MfValidation mf_validate(const MfCandidate& c) {
  MfValidation result;
  Diagnostics& diag = result.diagnostics;
  const Polynomial& f = c.f;
  const DegreeInfo info = f.degree_info();
  if (f.is_zero() || !info.homogeneous || *info.degree < 1) {
    diag.push_back({"f", "must be nonzero and homogeneous of degree >= 1, got " + f.to_string()});
    return result;
  }
  const int d = *info.degree;
  const std::size_t n0 = c.f0_degrees.size(), n1 = c.f1_degrees.size();
  if (n0 != n1)
    diag.push_back({"ranks", "rank(F0) = " + std::to_string(n0) + " differs from rank(F1) = " + std::to_string(n1)});

  auto check_shape = [&](const char* name, const std::vector<std::vector<Polynomial>>& m, std::size_t rows,
                         std::size_t cols) {
    bool ok = m.size() == rows;
    for (const auto& row : m) ok = ok && row.size() == cols;
    if (!ok)
      diag.push_back({name, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix"});
    return ok;
  };
  const bool shapes_ok = check_shape("s0", c.s0, n1, n0) && check_shape("s1", c.s1, n0, n1);
  if (!diag.empty() || !shapes_ok) return result;

  auto check_entries = [&](const char* name, const std::vector<std::vector<Polynomial>>& m,
                           const std::function<long(std::size_t, std::size_t)>& expected_degree) {
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t col = 0; col < m[r].size(); ++col) {
        const Polynomial& p = m[r][col];
        const std::string where = std::string(name) + " entry " + cell(r, col);
        if (!(p.field() == f.field()) || p.nvars() != f.nvars()) {
          diag.push_back({where, "lives in a different ring than f"});
          continue;
        }
        const long want = expected_degree(r, col);
        if (!p.is_homogeneous_of_degree(want))
          diag.push_back({where, "expected zero or homogeneous of degree " + std::to_string(want) + ", got " +
                                     p.to_string()});
      }
  };
  check_entries("s0", c.s0, [&](std::size_t r, std::size_t col) {
    return static_cast<long>(c.f0_degrees[col]) - c.f1_degrees[r];
  });
  check_entries("s1", c.s1, [&](std::size_t r, std::size_t col) {
    return static_cast<long>(c.f1_degrees[col]) + d - c.f0_degrees[r];
  });
  // Ring mismatches make the products meaningless.
  for (const auto& dg : diag)
    if (dg.message.find("different ring") != std::string::npos) return result;

  std::vector<Polynomial> s0, s1;
  for (const auto& row : c.s0) s0.insert(s0.end(), row.begin(), row.end());
  for (const auto& row : c.s1) s1.insert(s1.end(), row.begin(), row.end());
  auto composite = composite_diagnostics(f, n0, s0, s1);
  diag.insert(diag.end(), composite.begin(), composite.end());
  if (!diag.empty()) return result;

  result.value = assemble_sorted(RawMf{f, d, c.f0_degrees, c.f1_degrees, std::move(s0), std::move(s1)});
  return result;
}

MatrixFactorization mf_make(const MfCandidate& candidate) {
  MfValidation v = mf_validate(candidate);
  if (!v.ok()) throw ValidationError(kModule, std::move(v.diagnostics));
  return std::move(*v.value);
}

MfCandidate mf_to_candidate(const MatrixFactorization& F) {
  MfCandidate c{F.f(), {F.f0().begin(), F.f0().end()}, {F.f1().begin(), F.f1().end()}, {}, {}};
  const std::size_t n = F.rank();
  c.s0.assign(n, {});
  c.s1.assign(n, {});
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) {
      c.s0[r].push_back(F.s0().at(r, col));
      c.s1[r].push_back(F.s1().at(r, col));
    }
  return c;
}

Diagnostics mf_check(const MatrixFactorization& F) {
  Diagnostics out;
  const std::vector<int> f0(F.f0().begin(), F.f0().end());
  const std::vector<int> f1(F.f1().begin(), F.f1().end());
  if (!std::is_sorted(f0.begin(), f0.end()) || !std::is_sorted(f1.begin(), f1.end()))
    out.push_back({"degrees", "degree lists are not sorted"});
  if (!(F.s1().source() == F.f1().twisted(-F.degree())) || !(F.s1().target() == F.f0()))
    out.push_back({"s1", "source/target do not match (F1(-d), F0)"});
  MfValidation v = mf_validate(mf_to_candidate(F));
  out.insert(out.end(), v.diagnostics.begin(), v.diagnostics.end());
  return out;
}

MatrixFactorization mf_trivial_unit_first(const Polynomial& f, int twist) {
  return mf_make({f, {twist}, {twist}, {{Polynomial::constant(f.field(), f.nvars(), f.field().one())}}, {{f}}});
}

MatrixFactorization mf_trivial_unit_second(const Polynomial& f, int twist) {
  const DegreeInfo info = f.degree_info();
  if (!info.degree) throw DomainError(kModule, "f must be nonzero");
  return mf_make(
      {f, {*info.degree + twist}, {twist}, {{f}}, {{Polynomial::constant(f.field(), f.nvars(), f.field().one())}}});
}

MatrixFactorization mf_zero(const Polynomial& f) { return mf_make({f, {}, {}, {}, {}}); }

MatrixFactorization mf_shift(const MatrixFactorization& F) {
  // New s0 = -s1 : F1 -> F0(d); new s1 = -s0 : F0(d)(-d) = F0 -> F1.
  const int d = F.degree();
  std::vector<Polynomial> s0(F.s1().entries().begin(), F.s1().entries().end());
  std::vector<Polynomial> s1(F.s0().entries().begin(), F.s0().entries().end());
  for (Polynomial& p : s0) p = -p;
  for (Polynomial& p : s1) p = -p;
  const DegreeMultiset new_f0 = F.f1();
  const DegreeMultiset new_f1 = F.f0().twisted(d);
  HomogeneousMatrix m0(F.field(), F.nvars(), new_f0, new_f1, std::move(s0));
  HomogeneousMatrix m1(F.field(), F.nvars(), new_f1.twisted(-d), new_f0, std::move(s1));
  return MfAccess::make(F.f(), d, std::move(m0), std::move(m1));
}

MatrixFactorization mf_twist(const MatrixFactorization& F, int t) {
  if (t == 0) return F;
  return MfAccess::make(F.f(), F.degree(), F.s0().twisted(t), F.s1().twisted(t));
}

MatrixFactorization mf_normalize(const MatrixFactorization& F) {
  if (F.rank() == 0) return F;
  return mf_twist(F, F.f1()[0]);
}

MatrixFactorization mf_direct_sum(const MatrixFactorization& F, const MatrixFactorization& G) {
  if (!(F.f() == G.f())) throw MismatchError(kModule, "direct sum needs the same f on both sides");
  const std::size_t a = F.rank(), b = G.rank(), n = a + b;
  RawMf raw{F.f(), F.degree(), {}, {}, {}, {}};
  raw.f0.assign(F.f0().begin(), F.f0().end());
  raw.f0.insert(raw.f0.end(), G.f0().begin(), G.f0().end());
  raw.f1.assign(F.f1().begin(), F.f1().end());
  raw.f1.insert(raw.f1.end(), G.f1().begin(), G.f1().end());
  const Polynomial zero(F.field(), F.nvars());
  raw.s0.assign(n * n, zero);
  raw.s1.assign(n * n, zero);
  for (std::size_t r = 0; r < a; ++r)
    for (std::size_t c = 0; c < a; ++c) {
      raw.s0[r * n + c] = F.s0().at(r, c);
      raw.s1[r * n + c] = F.s1().at(r, c);
    }
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t c = 0; c < b; ++c) {
      raw.s0[(a + r) * n + a + c] = G.s0().at(r, c);
      raw.s1[(a + r) * n + a + c] = G.s1().at(r, c);
    }
  return assemble_sorted(std::move(raw));
}

MatrixFactorization mf_dual(const MatrixFactorization& F) {
  const std::size_t n = F.rank();
  RawMf raw{F.f(), F.degree(), {}, {}, {}, {}};
  for (int m : F.f1()) raw.f0.push_back(-m);
  for (int m : F.f0()) raw.f1.push_back(-m);
  // Transposes: new s0 is rank(F0) x rank(F1) with rows indexed by old F0.
  raw.s0.reserve(n * n);
  raw.s1.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      raw.s0.push_back(F.s0().at(c, r));
      raw.s1.push_back(F.s1().at(c, r));
    }
  return mf_normalize(assemble_sorted(std::move(raw)));
}

bool mf_is_reduced(const MatrixFactorization& F) {
  auto has_unit = [](const HomogeneousMatrix& m) {
    return std::any_of(m.entries().begin(), m.entries().end(),
                       [](const Polynomial& p) { return !p.constant_term().is_zero(); });
  };
  return !has_unit(F.s0()) && !has_unit(F.s1());
}

void BettiTable::add(int i, int j, std::uint64_t count) {
  if (i != 0 && i != 1) throw DomainError(kModule, "Betti index i must be 0 or 1");
  if (count == 0) return;
  entries_[{i, j}] += count;
}

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t BettiTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, count] : entries_) sum += count;
  return sum;
}

BettiTable mf_betti(const MatrixFactorization& F) {
  if (!mf_is_reduced(F))
    throw DomainError(kModule, "Betti numbers need a reduced factorization (run reduce first)");
  BettiTable table;
  for (int m : F.f0()) table.add(0, m, 1);
  for (int m : F.f1()) table.add(1, m, 1);
  return table;
}

bool presentation_equivalent(const MatrixFactorization& F, const MatrixFactorization& G) {
  if (F == G) return true;
  if (!(F.f() == G.f()) || !(F.f0() == G.f0()) || !(F.f1() == G.f1())) return false;
  const std::size_t n = F.rank();
  // perm0[k] / perm1[k]: index in G matched to index k of F. Assign all of
  // F0 first, then F1, checking every entry whose row and column are fixed.
  std::vector<std::size_t> perm0(n), perm1(n);
  std::vector<bool> used0(n, false), used1(n, false);
  std::function<bool(std::size_t)> search = [&](std::size_t step) -> bool {
    if (step == 2 * n) return true;
    const bool in_f0 = step < n;
    const std::size_t k = in_f0 ? step : step - n;
    auto& perm = in_f0 ? perm0 : perm1;
    auto& used = in_f0 ? used0 : used1;
    const DegreeMultiset& degs = in_f0 ? F.f0() : F.f1();
    for (std::size_t g = 0; g < n; ++g) {
      if (used[g] || degs[g] != degs[k]) continue;
      perm[k] = g;
      bool ok = true;
      if (!in_f0) {
        for (std::size_t c = 0; c < n && ok; ++c) ok = F.s0().at(k, c) == G.s0().at(g, perm0[c]);
        for (std::size_t r = 0; r < n && ok; ++r) ok = F.s1().at(r, k) == G.s1().at(perm0[r], g);
      }
      if (!ok) continue;
      used[g] = true;
      if (search(step + 1)) return true;
      used[g] = false;
    }
    return false;
  };
  return search(0);
}

}  // namespace mfkit
