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

#ifndef K3INST_SRC_POLY_MOD_P_H_
#define K3INST_SRC_POLY_MOD_P_H_

#include <cstdint>
#include <vector>

namespace k3inst::internal {

__extension__ typedef unsigned __int128 WideUnsigned;

// Dense univariate polynomials over F_p, coefficient of t^k at index k.
// Kept trimmed: no trailing zero coefficients; the zero polynomial is empty.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<WideUnsigned>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

 private:
  std::uint64_t p_;
};

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

inline Poly derivative(const PrimeField& F, const Poly& f) {
  Poly out;
  for (std::size_t k = 1; k < f.size(); ++k) {
    out.push_back(F.mul(f[k], k % F.modulus()));
  }
  trim(out);
  return out;
}

// Remainder of f modulo nonzero g.
inline Poly remainder(const PrimeField& F, Poly f, const Poly& g) {
  const std::uint64_t lead_inv = F.inv(g.back());
  while (f.size() >= g.size()) {
    const std::uint64_t c = F.mul(f.back(), lead_inv);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t k = 0; k < g.size(); ++k) {
      f[shift + k] = F.sub(f[shift + k], F.mul(c, g[k]));
    }
    trim(f);
  }
  return f;
}

inline Poly gcd(const PrimeField& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = remainder(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const PrimeField F(n);
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = F.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = F.mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace k3inst::internal

#endif  // K3INST_SRC_POLY_MOD_P_H_
