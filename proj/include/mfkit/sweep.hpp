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

#include <string>
#include <vector>

#include "mfkit/bott.hpp"

namespace mfkit {

struct SweepRow {
  int n = 0;
  int d = 0;
  int a = 0;
  int e = 0;
  Count rho = 0;
  Count bound = 0;
  bool pass = false;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

// rho(O_X) against 2^(e+1) for 1 <= n <= n_max and n + 1 <= d <= d_max,
// ordered by (n, d).
std::vector<SweepRow> sweep_rho_structure_sheaf_serial(int n_max, int d_max);
// Same rows, cells evaluated concurrently on up to `threads` threads
// (0 = OpenMP default).
std::vector<SweepRow> sweep_rho_structure_sheaf_parallel(int n_max, int d_max, int threads = 0);

// Header n,d,a,e,rho,bound,pass; one line per row.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace mfkit
