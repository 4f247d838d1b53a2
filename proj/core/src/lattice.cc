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

#include "k3inst/lattice.h"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace k3inst {

WeightVector normalize_weights(const WeightVector::Weights& raw) {
  for (const auto wi : raw) {
    if (wi <= 0) {
      throw std::invalid_argument("weights must be positive integers, got " +
                                  std::to_string(wi));
    }
  }
  WeightVector v;
  v.w_ = raw;
  std::sort(v.w_.begin(), v.w_.end());
  v.d_ = 0;
  for (const auto wi : v.w_) v.d_ += wi;
  return v;
}

std::string WeightVector::to_string() const {
  std::ostringstream os;
  os << '(' << w_[0] << ',' << w_[1] << ',' << w_[2] << ',' << w_[3] << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const WeightVector& w) {
  return os << w.to_string();
}

IndexSubset::IndexSubset(unsigned mask) : mask_(mask) {
  if (mask == 0 || mask > 0xFU) {
    throw std::invalid_argument("index subset must be a nonempty subset of {0,1,2,3}");
  }
}

IndexSubset::IndexSubset(std::initializer_list<int> members) : mask_(0) {
  for (const int i : members) {
    if (i < 0 || i >= kNumVariables) {
      throw std::invalid_argument("variable index out of range: " + std::to_string(i));
    }
    mask_ |= 1U << i;
  }
  if (mask_ == 0) throw std::invalid_argument("index subset must be nonempty");
}

int IndexSubset::size() const { return __builtin_popcount(mask_); }

std::vector<int> IndexSubset::members() const {
  std::vector<int> out;
  for (int i = 0; i < kNumVariables; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<IndexSubset> IndexSubset::all() {
  std::vector<IndexSubset> out;
  for (unsigned m = 1; m <= 0xFU; ++m) out.emplace_back(m);
  return out;
}

std::string IndexSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const int i : members()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool ExponentVector::supported_in(const IndexSubset& subset) const {
  for (int i = 0; i < kNumVariables; ++i) {
    if (a[static_cast<std::size_t>(i)] != 0 && !subset.contains(i)) return false;
  }
  return true;
}

std::string ExponentVector::to_string() const {
  std::string s;
  for (int i = 0; i < kNumVariables; ++i) {
    const auto e = a[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::int64_t weighted_degree(const ExponentVector& e, const WeightVector& w) {
  std::int64_t total = 0;
  for (int i = 0; i < kNumVariables; ++i) {
    total += e.a[static_cast<std::size_t>(i)] * w[i];
  }
  return total;
}

namespace {

// Fills exponents for indices >= i. Ascending exponents at each index in
// ascending index order produce lexicographic output.
void enumerate_from(const WeightVector& w, const IndexSubset& subset, int i,
                    std::int64_t remaining, ExponentVector& current,
                    std::vector<ExponentVector>& out) {
  if (i == kNumVariables) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  auto& slot = current.a[static_cast<std::size_t>(i)];
  if (!subset.contains(i)) {
    slot = 0;
    enumerate_from(w, subset, i + 1, remaining, current, out);
    return;
  }
  for (std::int64_t k = 0; k * w[i] <= remaining; ++k) {
    slot = k;
    enumerate_from(w, subset, i + 1, remaining - k * w[i], current, out);
  }
  slot = 0;
}

bool exists_from(const WeightVector& w, unsigned mask, int i,
                 std::int64_t remaining) {
  while (i < kNumVariables && !((mask >> i) & 1U)) ++i;
  if (i == kNumVariables) return remaining == 0;
  // Last variable in the subset: a divisibility test settles it.
  const unsigned rest = mask >> (i + 1);
  if (rest == 0) return remaining % w[i] == 0;
  for (std::int64_t left = remaining; left >= 0; left -= w[i]) {
    if (exists_from(w, mask, i + 1, left)) return true;
  }
  return false;
}

}  // namespace

std::vector<ExponentVector> enumerate_monomials(const WeightVector& w,
                                                std::int64_t target,
                                                const IndexSubset& subset) {
  std::vector<ExponentVector> out;
  if (target < 0) return out;
  ExponentVector current;
  enumerate_from(w, subset, 0, target, current, out);
  return out;
}

bool has_monomial(const WeightVector& w, std::int64_t target,
                  const IndexSubset& subset) {
  if (target < 0) return false;
  return exists_from(w, subset.mask(), 0, target);
}

}  // namespace k3inst
