// Copyright 2026 The k3inst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "k3inst/errors.h"
#include "k3inst/singular.h"
#include "poly_mod_p.h"

namespace k3inst {
namespace {

constexpr int kMaxDraws = 8;

}  // namespace

std::int64_t finite_field_edge_oracle(const WeightVector& w, int i, int j,
                                      std::uint64_t prime, std::uint64_t seed) {
  if (i < 0 || j >= kNumVariables || i >= j) {
    throw std::invalid_argument("edge indices must satisfy 0 <= i < j <= 3");
  }
  const std::int64_t h = std::gcd(w[i], w[j]);
  if (h <= 1) throw std::invalid_argument("edge oracle needs gcd(w_i, w_j) > 1");
  if (prime <= static_cast<std::uint64_t>(w.degree()) || !internal::is_prime(prime)) {
    throw std::invalid_argument("oracle modulus must be a prime larger than d");
  }

  const auto solutions = enumerate_monomials(w, w.degree(), IndexSubset{i, j});
  if (solutions.empty()) {
    throw InternalInconsistency("edge P" + std::to_string(i) + "P" + std::to_string(j) +
                                " has no monomial of degree d");
  }

  // x_i^a x_j^b / (x_i^a_min x_j^b_max) = t^((a - a_min) / (w_j / h)).
  const std::int64_t step = w[j] / h;
  const std::int64_t a_min = solutions.front().a[static_cast<std::size_t>(i)];
  std::vector<std::size_t> powers;
  std::size_t top = 0;
  for (const auto& s : solutions) {
    const std::int64_t shift = s.a[static_cast<std::size_t>(i)] - a_min;
    if (shift % step != 0) {
      throw InternalInconsistency("edge monomials are not an arithmetic progression");
    }
    powers.push_back(static_cast<std::size_t>(shift / step));
    top = std::max(top, powers.back());
  }

  const internal::PrimeField F(prime);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(draw));
    std::uniform_int_distribution<std::uint64_t> coeff(1, prime - 1);
    internal::Poly f(top + 1, 0);
    for (const auto k : powers) f[k] = F.add(f[k], coeff(rng));
    internal::trim(f);
    if (f.empty() || f.front() == 0) continue;

    const auto g = internal::gcd(F, f, internal::derivative(F, f));
    const long repeated = internal::degree(g);
    if (repeated > 0) continue;  // repeated root: degenerate draw
    // f(0) != 0, so every root is nonzero; squarefree, so all are distinct.
    return internal::degree(f) - repeated;
  }
  throw std::runtime_error("finite-field oracle: degenerate coefficients on every draw");
}

SingularityData oracle_singularity_data(const WeightVector& w, std::uint64_t prime,
                                        std::uint64_t seed) {
  SingularityData data;
  for (int i = 0; i < kNumVariables; ++i) {
    if (w[i] > 1 && w.degree() % w[i] != 0) data.add(w[i]);
  }
  for (int i = 0; i < kNumVariables; ++i) {
    for (int j = i + 1; j < kNumVariables; ++j) {
      const std::int64_t h = std::gcd(w[i], w[j]);
      if (h <= 1) continue;
      const auto n = finite_field_edge_oracle(w, i, j, prime, seed);
      if (n > 0) data.add(h, n);
    }
  }
  return data;
}

}  // namespace k3inst
