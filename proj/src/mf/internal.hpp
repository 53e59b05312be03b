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

#include <vector>

#include "mfkit/mf.hpp"

namespace mfkit {

// Row-major, unsorted working form used while building factorizations.
struct RawMf {
  Polynomial f;
  int d = 0;
  std::vector<int> f0;
  std::vector<int> f1;
  std::vector<Polynomial> s0;  // f1.size() x f0.size()
  std::vector<Polynomial> s1;  // f0.size() x f1.size()
};

struct MfAccess {
  static MatrixFactorization make(Polynomial f, int d, HomogeneousMatrix s0, HomogeneousMatrix s1) {
    return MatrixFactorization(std::move(f), d, std::move(s0), std::move(s1));
  }
};

RawMf to_raw(const MatrixFactorization& F);
// Stably sorts both degree lists, permuting the matrices to match. Performs
// no validation.
MatrixFactorization assemble_sorted(RawMf raw);

// First failing entry of s1 s0 - f and of s0 s1 - f, if any.
Diagnostics composite_diagnostics(const Polynomial& f, std::size_t rank, const std::vector<Polynomial>& s0,
                                  const std::vector<Polynomial>& s1);

}  // namespace mfkit
