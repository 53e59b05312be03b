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

#include "internal.hpp"
#include "mfkit/kernels.hpp"
#include "mfkit/mf.hpp"

namespace mfkit {

namespace {

const char* kModule = "mf";

std::vector<Polynomial> identity_entries(const Field& field, std::size_t nvars, std::size_t n) {
  std::vector<Polynomial> out(n * n, Polynomial(field, nvars));
  for (std::size_t i = 0; i < n; ++i) out[i * n + i] = Polynomial::constant(field, nvars, field.one());
  return out;
}

// Writes an m x m block into the top-left corner (row0, col0) of an n x n grid.
void place(std::vector<Polynomial>& grid, std::size_t n, std::size_t row0, std::size_t col0,
           std::vector<Polynomial> block, std::size_t m, bool negate) {
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      Polynomial& dst = grid[(row0 + r) * n + col0 + c];
      dst = negate ? -block[r * m + c] : std::move(block[r * m + c]);
    }
}

MatrixFactorization elementary(const Polynomial& f, int half_degree, Polynomial s0, Polynomial s1) {
  return mf_make({f, {half_degree}, {0}, {{std::move(s0)}}, {{std::move(s1)}}});
}

}  // namespace

MatrixFactorization mf_tensor(const MatrixFactorization& F, const MatrixFactorization& G, Normalize normalize) {
  require_same_ring(F.f(), G.f());
  if (F.degree() != G.degree())
    throw MismatchError(kModule, "tensor product needs deg f = deg g (got " + std::to_string(F.degree()) + " and " +
                                   std::to_string(G.degree()) + ")");
  Polynomial h = F.f() + G.f();
  if (h.is_zero()) throw DomainError(kModule, "tensor product would factorize f + g = 0");

  const int d = F.degree();
  const Field field = h.field();
  const std::size_t nvars = h.nvars();
  const std::size_t a = F.rank(), b = G.rank(), m = a * b, n = 2 * m;
  const kernels::Shape fa{a, a}, gb{b, b};
  const auto ia = identity_entries(field, nvars, a);
  const auto ib = identity_entries(field, nvars, b);
  auto kron = [&](std::span<const Polynomial> x, kernels::Shape xs, std::span<const Polynomial> y,
                  kernels::Shape ys) { return kernels::kron_parallel(x, xs, y, ys, field, nvars); };

  RawMf raw{h, d, std::vector<int>(n), std::vector<int>(n), {}, {}};
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t k = 0; k < b; ++k) {
      const std::size_t idx = i * b + k;
      raw.f0[idx] = F.f0()[i] + G.f0()[k];          // A = F0 (x) G0
      raw.f0[m + idx] = F.f1()[i] + G.f1()[k] + d;  // B = (F1 (x) G1)(-d)
      raw.f1[idx] = F.f1()[i] + G.f0()[k];          // C = F1 (x) G0
      raw.f1[m + idx] = F.f0()[i] + G.f1()[k];      // D = F0 (x) G1
    }

  const Polynomial zero(field, nvars);
  raw.s0.assign(n * n, zero);
  raw.s1.assign(n * n, zero);
  // s0: rows (C, D), columns (A, B).
  place(raw.s0, n, 0, 0, kron(F.s0().entries(), fa, ib, gb), m, false);
  place(raw.s0, n, 0, m, kron(ia, fa, G.s1().entries(), gb), m, false);
  place(raw.s0, n, m, 0, kron(ia, fa, G.s0().entries(), gb), m, false);
  place(raw.s0, n, m, m, kron(F.s1().entries(), fa, ib, gb), m, true);
  // s1: rows (A, B), columns (C, D).
  place(raw.s1, n, 0, 0, kron(F.s1().entries(), fa, ib, gb), m, false);
  place(raw.s1, n, 0, m, kron(ia, fa, G.s1().entries(), gb), m, false);
  place(raw.s1, n, m, 0, kron(ia, fa, G.s0().entries(), gb), m, false);
  place(raw.s1, n, m, m, kron(F.s0().entries(), fa, ib, gb), m, true);

  const Diagnostics check = composite_diagnostics(h, n, raw.s0, raw.s1);
  if (!check.empty()) throw std::logic_error("mf: tensor product failed its composite check: " + check[0].to_string());

  MatrixFactorization T = assemble_sorted(std::move(raw));
  return normalize == Normalize::Yes ? mf_normalize(T) : T;
}

MatrixFactorization mf_fermat(const Field& field, int pairs, int half_degree, bool solo) {
  if (pairs < 1) throw DomainError(kModule, "fermat needs at least one pair");
  if (half_degree < 1) throw DomainError(kModule, "fermat needs half degree >= 1");
  if (!field.has_sqrt_minus_one())
    throw DomainError(kModule, "field " + field.name() + " lacks a square root of -1 (use Qi or F_p, p = 1 mod 4)");
  const std::size_t nvars = static_cast<std::size_t>(2 * pairs + (solo ? 1 : 0));
  const auto m = static_cast<unsigned>(half_degree);
  const Scalar i = field.sqrt_minus_one();
  auto power = [&](std::size_t var) { return Polynomial::variable(field, nvars, var).pow(m); };

  std::optional<MatrixFactorization> acc;
  for (int k = 0; k < pairs; ++k) {
    const Polynomial x = power(2 * static_cast<std::size_t>(k));
    const Polynomial y = power(2 * static_cast<std::size_t>(k) + 1);
    const Polynomial iy = i * y;
    MatrixFactorization factor = elementary(x * x + y * y, half_degree, x + iy, x - iy);
    acc = acc ? mf_tensor(*acc, factor, Normalize::Yes) : factor;
  }
  if (solo) {
    const Polynomial z = power(nvars - 1);
    acc = mf_tensor(*acc, elementary(z * z, half_degree, z, z), Normalize::Yes);
  }
  return *acc;
}

}  // namespace mfkit
