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

#include "mfkit/sweep.hpp"

#include <cstdint>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "exception_guard.hpp"
#include "mfkit/error.hpp"

namespace mfkit {

namespace {

std::vector<std::pair<int, int>> sweep_cells(int n_max, int d_max) {
  if (n_max < 1) throw DomainError("cli", "--n-max must be >= 1");
  std::vector<std::pair<int, int>> cells;
  for (int n = 1; n <= n_max; ++n)
    for (int d = n + 1; d <= d_max; ++d) cells.emplace_back(n, d);
  return cells;
}

SweepRow evaluate(int n, int d) {
  SweepRow row{n, d, n + 1 - d, n / 2, 0, 0, false};
  row.rho = rho_structure_sheaf(n, d);
  row.bound = Count{1} << (row.e + 1);
  row.pass = row.rho >= row.bound;
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_rho_structure_sheaf_serial(int n_max, int d_max) {
  std::vector<SweepRow> rows;
  for (const auto& [n, d] : sweep_cells(n_max, d_max)) rows.push_back(evaluate(n, d));
  return rows;
}

std::vector<SweepRow> sweep_rho_structure_sheaf_parallel(int n_max, int d_max, int threads) {
  const auto cells = sweep_cells(n_max, d_max);
  std::vector<SweepRow> rows(cells.size());
  const auto count = static_cast<std::int64_t>(cells.size());
  kernels::ExceptionGuard guard;
  // Rows are written by index, so the output order is the (n, d) order of
  // the cells regardless of scheduling.
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team) if (count > 1)
  for (std::int64_t k = 0; k < count; ++k) guard.run([&] { rows[static_cast<std::size_t>(k)] = evaluate(cells[static_cast<std::size_t>(k)].first, cells[static_cast<std::size_t>(k)].second); });
#else
  (void)threads;
  for (std::int64_t k = 0; k < count; ++k) rows[static_cast<std::size_t>(k)] = evaluate(cells[static_cast<std::size_t>(k)].first, cells[static_cast<std::size_t>(k)].second);
#endif
  guard.rethrow();
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,d,a,e,rho,bound,pass\n";
  for (const SweepRow& r : rows)
    out << r.n << ',' << r.d << ',' << r.a << ',' << r.e << ',' << r.rho << ',' << r.bound << ','
        << (r.pass ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace mfkit
