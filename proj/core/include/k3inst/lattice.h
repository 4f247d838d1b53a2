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

#ifndef K3INST_LATTICE_H_
#define K3INST_LATTICE_H_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace k3inst {

inline constexpr int kNumVariables = 4;

/// Weights (w0 <= w1 <= w2 <= w3) of a weighted projective 3-space together
/// with the degree d of the hypersurface. Built by normalize_weights, which
/// always sets d = w0 + w1 + w2 + w3.
class WeightVector {
 public:
  using Weights = std::array<std::int64_t, kNumVariables>;

  WeightVector() = default;

  const Weights& weights() const { return w_; }
  std::int64_t operator[](int i) const { return w_[static_cast<std::size_t>(i)]; }
  std::int64_t degree() const { return d_; }

  /// Skips validation and the d = sum(w) rule. Only for probing the
  /// admissibility predicates on pairs that cannot come out of
  /// normalize_weights (e.g. a linear cone).
  static WeightVector with_degree_unchecked(const Weights& w, std::int64_t d) {
    WeightVector v;
    v.w_ = w;
    v.d_ = d;
    return v;
  }

  /// "(1,4,6,11)"
  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  friend WeightVector normalize_weights(const Weights& raw);
  Weights w_{1, 1, 1, 1};
  std::int64_t d_ = 4;
};

/// Sorts ascending and sets d to the sum. Throws std::invalid_argument if a
/// component is <= 0.
WeightVector normalize_weights(const WeightVector::Weights& raw);

std::ostream& operator<<(std::ostream& os, const WeightVector& w);

/// Nonempty subset of the variable indices {0,1,2,3}, stored as a bitmask.
class IndexSubset {
 public:
  /// Throws std::invalid_argument for an empty mask or bits outside 0..3.
  explicit IndexSubset(unsigned mask);
  IndexSubset(std::initializer_list<int> members);

  unsigned mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> i) & 1U; }
  int size() const;
  std::vector<int> members() const;

  /// All 15 nonempty subsets, by ascending mask.
  static std::vector<IndexSubset> all();

  /// "{0,3}"
  std::string to_string() const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

 private:
  unsigned mask_;
};

/// Exponents of a monomial x0^a0 x1^a1 x2^a2 x3^a3.
struct ExponentVector {
  std::array<std::int64_t, kNumVariables> a{};

  bool supported_in(const IndexSubset& subset) const;
  /// "x1^5*x2", or "1" for the empty monomial.
  std::string to_string() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

std::int64_t weighted_degree(const ExponentVector& e, const WeightVector& w);

/// Every exponent vector supported in `subset` with weighted degree
/// `target`, in increasing lexicographic order.
std::vector<ExponentVector> enumerate_monomials(const WeightVector& w,
                                                std::int64_t target,
                                                const IndexSubset& subset);

/// Same question as !enumerate_monomials(...).empty(), answered with early
/// exit and without allocating.
bool has_monomial(const WeightVector& w, std::int64_t target,
                  const IndexSubset& subset);

}  // namespace k3inst

#endif  // K3INST_LATTICE_H_
