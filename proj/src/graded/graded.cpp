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

#include "mfkit/graded.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mfkit/kernels.hpp"

namespace mfkit {

namespace {

const char* kModule = "graded";

std::string degrees_string(const DegreeMultiset& d) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < d.rank(); ++i) out << (i ? "," : "") << d[i];
  out << "}";
  return out.str();
}

}  // namespace

DegreeMultiset::DegreeMultiset(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  std::stable_sort(degrees_.begin(), degrees_.end());
}

DegreeMultiset DegreeMultiset::twisted(int t) const {
  DegreeMultiset out;
  out.degrees_.reserve(degrees_.size());
  for (int m : degrees_) out.degrees_.push_back(m - t);
  return out;
}

std::size_t DegreeMultiset::count(int degree) const {
  return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), degree));
}

DegreeMultiset multiset_twist(const DegreeMultiset& d, int t) { return d.twisted(t); }

std::vector<std::size_t> sorting_permutation(std::span<const int> degrees) {
  std::vector<std::size_t> perm(degrees.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return degrees[a] < degrees[b]; });
  return perm;
}

HomogeneousMatrix::HomogeneousMatrix(Field field, std::size_t nvars, DegreeMultiset source, DegreeMultiset target,
                                     std::vector<Polynomial> entries)
    : field_(field),
      nvars_(nvars),
      source_(std::move(source)),
      target_(std::move(target)),
      entries_(std::move(entries)) {
  if (entries_.size() != source_.rank() * target_.rank())
    throw MismatchError(kModule, "matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                                     std::to_string(target_.rank()) + "x" + std::to_string(source_.rank()));
}

HomogeneousMatrix HomogeneousMatrix::zero(Field field, std::size_t nvars, DegreeMultiset source,
                                          DegreeMultiset target) {
  std::vector<Polynomial> entries(source.rank() * target.rank(), Polynomial(field, nvars));
  return HomogeneousMatrix(field, nvars, std::move(source), std::move(target), std::move(entries));
}

HomogeneousMatrix HomogeneousMatrix::identity(Field field, std::size_t nvars, DegreeMultiset degrees) {
  const std::size_t n = degrees.rank();
  std::vector<Polynomial> entries(n * n, Polynomial(field, nvars));
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = Polynomial::constant(field, nvars, field.one());
  return HomogeneousMatrix(field, nvars, degrees, degrees, std::move(entries));
}

HomogeneousMatrix HomogeneousMatrix::twisted(int t) const {
  return HomogeneousMatrix(field_, nvars_, source_.twisted(t), target_.twisted(t), entries_);
}

HomogeneousMatrix HomogeneousMatrix::negated() const {
  std::vector<Polynomial> entries;
  entries.reserve(entries_.size());
  for (const Polynomial& p : entries_) entries.push_back(-p);
  return HomogeneousMatrix(field_, nvars_, source_, target_, std::move(entries));
}

bool HomogeneousMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Diagnostics matrix_validate(const HomogeneousMatrix& m) {
  Diagnostics out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Polynomial& p = m.at(r, c);
      const std::string where = "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
      if (!(p.field() == m.field()) || p.nvars() != m.nvars()) {
        out.push_back({where, "lives in " + p.field().name() + "[" + std::to_string(p.nvars()) +
                                  " vars], matrix ring is " + m.field().name() + "[" +
                                  std::to_string(m.nvars()) + " vars]"});
        continue;
      }
      const long expected = m.expected_degree(r, c);
      if (p.is_homogeneous_of_degree(expected)) continue;
      const DegreeInfo info = p.degree_info();
      std::string got = info.homogeneous ? "degree " + std::to_string(*info.degree) : "a non-homogeneous polynomial";
      out.push_back({where, "expected zero or homogeneous of degree " + std::to_string(expected) + " (source " +
                                std::to_string(m.source()[c]) + " - target " + std::to_string(m.target()[r]) +
                                "), got " + got});
    }
  return out;
}

HomogeneousMatrix matrix_compose(const HomogeneousMatrix& a, const HomogeneousMatrix& b) {
  if (!(a.field() == b.field()) || a.nvars() != b.nvars())
    throw MismatchError(kModule, "cannot compose matrices over different rings");
  if (!(a.source() == b.target()))
    throw MismatchError(kModule, "source of left factor " + degrees_string(a.source()) +
                                     " differs from target of right factor " + degrees_string(b.target()));
  auto entries = kernels::matmul_parallel(a.entries(), {a.rows(), a.cols()}, b.entries(), {b.rows(), b.cols()},
                                          a.field(), a.nvars());
  return HomogeneousMatrix(a.field(), a.nvars(), b.source(), a.target(), std::move(entries));
}

}  // namespace mfkit
