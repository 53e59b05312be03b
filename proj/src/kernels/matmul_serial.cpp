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

#include "mfkit/error.hpp"
#include "mfkit/kernels.hpp"

namespace mfkit::kernels {

std::vector<Polynomial> matmul_serial(std::span<const Polynomial> a, Shape a_shape, std::span<const Polynomial> b,
                                      Shape b_shape, const Field& field, std::size_t nvars) {
  if (a_shape.cols != b_shape.rows) throw MismatchError("graded", "inner dimensions differ");
  std::vector<Polynomial> c(a_shape.rows * b_shape.cols, Polynomial(field, nvars));
  for (std::size_t i = 0; i < a_shape.rows; ++i)
    for (std::size_t j = 0; j < b_shape.cols; ++j) {
      Polynomial acc(field, nvars);
      for (std::size_t k = 0; k < a_shape.cols; ++k) {
        const Polynomial& x = a[i * a_shape.cols + k];
        const Polynomial& y = b[k * b_shape.cols + j];
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
      }
      c[i * b_shape.cols + j] = std::move(acc);
    }
  return c;
}

std::vector<Polynomial> kron_serial(std::span<const Polynomial> a, Shape a_shape, std::span<const Polynomial> b,
                                    Shape b_shape, const Field& field, std::size_t nvars) {
  const std::size_t cols = a_shape.cols * b_shape.cols;
  std::vector<Polynomial> c(a_shape.rows * b_shape.rows * cols, Polynomial(field, nvars));
  for (std::size_t i = 0; i < a_shape.rows; ++i)
    for (std::size_t j = 0; j < a_shape.cols; ++j)
      for (std::size_t k = 0; k < b_shape.rows; ++k)
        for (std::size_t l = 0; l < b_shape.cols; ++l)
          c[(i * b_shape.rows + k) * cols + j * b_shape.cols + l] =
              a[i * a_shape.cols + j] * b[k * b_shape.cols + l];
  return c;
}

}  // namespace mfkit::kernels
