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

#include <cstddef>
#include <span>
#include <vector>

#include "mfkit/polynomial.hpp"

// Data-parallel kernels. Each has a serial reference used by the tests and
// the benchmark; the OpenMP variant must produce bit-identical results.
namespace mfkit::kernels {

// Shape of a row-major matrix of polynomials.
struct Shape {
  std::size_t rows = 0;
  std::size_t cols = 0;
};

// C = A * B for row-major A (a_shape) and B (b_shape); requires
// a_shape.cols == b_shape.rows. Every entry must live in (field, nvars).
std::vector<Polynomial> matmul_serial(std::span<const Polynomial> a, Shape a_shape, std::span<const Polynomial> b,
                                      Shape b_shape, const Field& field, std::size_t nvars);
std::vector<Polynomial> matmul_parallel(std::span<const Polynomial> a, Shape a_shape, std::span<const Polynomial> b,
                                        Shape b_shape, const Field& field, std::size_t nvars);

// Kronecker product A (x) B, row-major, entry (i*Br + k, j*Bc + l) = A(i,j) * B(k,l).
std::vector<Polynomial> kron_serial(std::span<const Polynomial> a, Shape a_shape, std::span<const Polynomial> b,
                                    Shape b_shape, const Field& field, std::size_t nvars);
std::vector<Polynomial> kron_parallel(std::span<const Polynomial> a, Shape a_shape, std::span<const Polynomial> b,
                                      Shape b_shape, const Field& field, std::size_t nvars);

// Number of worker threads the OpenMP kernels will use (1 without OpenMP).
int max_threads();
// Caps the OpenMP kernels at n threads (n >= 1); no-op without OpenMP.
void set_max_threads(int n);

}  // namespace mfkit::kernels
