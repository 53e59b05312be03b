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

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "exception_guard.hpp"
#include "mfkit/error.hpp"
#include "mfkit/kernels.hpp"

namespace mfkit::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_max_threads(int n) {
#ifdef _OPENMP
  if (n >= 1) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

std::vector<Polynomial> matmul_parallel(std::span<const Polynomial> a, Shape a_shape, std::span<const Polynomial> b,
                                        Shape b_shape, const Field& field, std::size_t nvars) {
  if (a_shape.cols != b_shape.rows) throw MismatchError("graded", "inner dimensions differ");
  const auto cells = static_cast<std::int64_t>(a_shape.rows * b_shape.cols);
  std::vector<Polynomial> c(static_cast<std::size_t>(cells), Polynomial(field, nvars));
  ExceptionGuard guard;
  // Each cell is written by exactly one iteration; the summation order over k
  // matches matmul_serial so results are bit-identical.
#pragma omp parallel for schedule(dynamic) if (cells > 1)
  for (std::int64_t cell = 0; cell < cells; ++cell) {
    const std::size_t i = static_cast<std::size_t>(cell) / b_shape.cols;
    const std::size_t j = static_cast<std::size_t>(cell) % b_shape.cols;
    guard.run([&] {
      Polynomial acc(field, nvars);
      for (std::size_t k = 0; k < a_shape.cols; ++k) {
        const Polynomial& x = a[i * a_shape.cols + k];
        const Polynomial& y = b[k * b_shape.cols + j];
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
      }
      c[static_cast<std::size_t>(cell)] = std::move(acc);
    });
  }
  guard.rethrow();
  return c;
}

std::vector<Polynomial> kron_parallel(std::span<const Polynomial> a, Shape a_shape, std::span<const Polynomial> b,
                                      Shape b_shape, const Field& field, std::size_t nvars) {
  const std::size_t cols = a_shape.cols * b_shape.cols;
  const auto cells = static_cast<std::int64_t>(a_shape.rows * b_shape.rows * cols);
  std::vector<Polynomial> c(static_cast<std::size_t>(cells), Polynomial(field, nvars));
  ExceptionGuard guard;
#pragma omp parallel for schedule(static) if (cells > 1)
  for (std::int64_t cell = 0; cell < cells; ++cell) {
    const std::size_t row = static_cast<std::size_t>(cell) / cols;
    const std::size_t col = static_cast<std::size_t>(cell) % cols;
    const std::size_t i = row / b_shape.rows, k = row % b_shape.rows;
    const std::size_t j = col / b_shape.cols, l = col % b_shape.cols;
    guard.run([&] { c[static_cast<std::size_t>(cell)] = a[i * a_shape.cols + j] * b[k * b_shape.cols + l]; });
  }
  guard.rethrow();
  return c;
}

}  // namespace mfkit::kernels
