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

// Serial reference kernels against their OpenMP variants.

#include <benchmark/benchmark.h>

#include "mfkit/kernels.hpp"
#include "mfkit/random.hpp"
#include "mfkit/sweep.hpp"

namespace {

using namespace mfkit;

std::vector<Polynomial> block(std::size_t count, std::uint64_t seed) {
  fuzz::Rng rng(seed);
  const Field F = Field::prime(2147483629);
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(fuzz::random_homogeneous(F, 4, 3, rng, 6));
  return out;
}

template <auto Kernel>
void BM_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = block(n * n, 1), b = block(n * n, 2);
  const Field F = a.front().field();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, {n, n}, b, {n, n}, F, 4));
  state.SetComplexityN(state.range(0));
}

template <auto Kernel>
void BM_kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = block(n * n, 3), b = block(n * n, 4);
  const Field F = a.front().field();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, {n, n}, b, {n, n}, F, 4));
}

void BM_sweep_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_rho_structure_sheaf_serial(8, static_cast<int>(state.range(0))));
}

void BM_sweep_parallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep_rho_structure_sheaf_parallel(8, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_matmul<kernels::matmul_serial>)->Name("matmul/serial")->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_matmul<kernels::matmul_parallel>)->Name("matmul/parallel")->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_kron<kernels::kron_serial>)->Name("kron/serial")->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(BM_kron<kernels::kron_parallel>)->Name("kron/parallel")->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(BM_sweep_serial)->Name("sweep/serial")->Arg(12)->Arg(40);
BENCHMARK(BM_sweep_parallel)->Name("sweep/parallel")->Arg(12)->Arg(40);

BENCHMARK_MAIN();
