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

#include <stdexcept>

#include "doctest.h"
#include "mfkit/kernels.hpp"
#include "mfkit/sweep.hpp"
#include "mfkit/random.hpp"

using namespace mfkit;
using mfkit::fuzz::random_polynomial;
using mfkit::fuzz::Rng;

namespace {

std::vector<Polynomial> random_block(const Field& field, std::size_t count, Rng& rng) {
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_polynomial(field, 3, rng, 2, 3));
  return out;
}

}  // namespace

TEST_CASE("matmul and kron: parallel equals serial") {
  Rng rng(5);
  const Field F = Field::prime(13);
  for (int threads : {1, 2, 4}) {
    kernels::set_max_threads(threads);
    for (int k = 0; k < 20; ++k) {
      std::uniform_int_distribution<std::size_t> dim(0, 5);
      const kernels::Shape as{dim(rng), dim(rng)};
      const kernels::Shape bs{as.cols, dim(rng)};
      const auto a = random_block(F, as.rows * as.cols, rng);
      const auto b = random_block(F, bs.rows * bs.cols, rng);
      REQUIRE(kernels::matmul_parallel(a, as, b, bs, F, 3) == kernels::matmul_serial(a, as, b, bs, F, 3));
      const kernels::Shape cs{dim(rng), dim(rng)};
      const auto c = random_block(F, cs.rows * cs.cols, rng);
      REQUIRE(kernels::kron_parallel(a, as, c, cs, F, 3) == kernels::kron_serial(a, as, c, cs, F, 3));
    }
  }
  kernels::set_max_threads(1);
}

TEST_CASE("matmul reference values") {
  const Field Q = Field::rationals();
  auto P = [&](std::string_view s) { return parse_polynomial(s, Q, 2); };
  const std::vector<Polynomial> a{P("x0"), P("1"), P("0"), P("x1")};
  const std::vector<Polynomial> b{P("x1"), P("2"), P("-1"), P("x0")};
  const auto c = kernels::matmul_serial(a, {2, 2}, b, {2, 2}, Q, 2);
  CHECK(c == std::vector<Polynomial>{P("x0*x1 - 1"), P("3*x0"), P("-x1"), P("x0*x1")});
  const auto k = kernels::kron_serial(a, {2, 2}, std::vector<Polynomial>{P("1"), P("x0")}, {1, 2}, Q, 2);
  CHECK(k == std::vector<Polynomial>{P("x0"), P("x0^2"), P("1"), P("x0"), P("0"), P("0"), P("x1"), P("x0*x1")});
  CHECK_THROWS_AS(kernels::matmul_parallel(a, {2, 2}, b, {1, 4}, Q, 2), MismatchError);
}

TEST_CASE("parallel kernels propagate exceptions") {
  const Field Q = Field::rationals();
  const std::vector<Polynomial> a{parse_polynomial("x0", Q, 1)};
  const std::vector<Polynomial> b{parse_polynomial("x0", Field::rationals(), 2)};
  CHECK_THROWS_AS(kernels::matmul_parallel(a, {1, 1}, b, {1, 1}, Q, 1), MismatchError);
  CHECK_THROWS_AS(kernels::kron_parallel(a, {1, 1}, b, {1, 1}, Q, 1), MismatchError);
}

TEST_CASE("sweep: parallel equals serial") {
  const auto serial = sweep_rho_structure_sheaf_serial(6, 10);
  for (int threads : {1, 2, 3}) CHECK(sweep_rho_structure_sheaf_parallel(6, 10, threads) == serial);
  const std::string csv = sweep_csv(serial);
  CHECK(csv.rfind("n,d,a,e,rho,bound,pass\n", 0) == 0);
}
