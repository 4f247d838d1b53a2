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

#ifndef K3INST_SINGULAR_H_
#define K3INST_SINGULAR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "k3inst/lattice.h"

namespace k3inst {

struct VertexLocus {
  int index;
  friend bool operator==(const VertexLocus&, const VertexLocus&) = default;
};

/// Open edge P_iP_j, i < j, with gcd(w_i, w_j) > 1.
struct EdgeLocus {
  int i;
  int j;
  friend bool operator==(const EdgeLocus&, const EdgeLocus&) = default;
};

using SingularLocus = std::variant<VertexLocus, EdgeLocus>;

std::string locus_to_string(const SingularLocus& locus);

/// `count` points of type A_{order-1} on one stratum.
struct CyclicSingularity {
  SingularLocus locus;
  std::int64_t order;
  std::int64_t count;

  /// "A3"
  std::string type_name() const { return "A" + std::to_string(order - 1); }
};

/// Multiset of isotropy orders, kept as (order, count) entries sorted by
/// ascending order with distinct orders and positive counts.
class SingularityData {
 public:
  struct Entry {
    std::int64_t order;
    std::int64_t count;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SingularityData() = default;

  /// Merges into the entry with the same order. Throws std::invalid_argument
  /// for order < 2 or count < 1.
  void add(std::int64_t order, std::int64_t count = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  /// Number of singular points.
  std::int64_t point_count() const;
  /// Sum of count * (m - 1): the number of exceptional curves of the
  /// minimal resolution.
  std::int64_t exceptional_rank() const;
  std::int64_t count_of(std::int64_t order) const;

  /// Canonical form: ascending order, "k*A{m-1}" with k=1 omitted, joined by
  /// '+': "7*A1+A2". Empty string for no singularities.
  std::string canonical() const;

  /// Inverse of canonical(); also accepts "" as no singularities. Throws
  /// std::invalid_argument.
  static SingularityData parse_canonical(std::string_view text);

  friend bool operator==(const SingularityData&, const SingularityData&) = default;

 private:
  std::vector<Entry> entries_;
};

/// The singular point at vertex P_i, if X passes through it and it is not
/// smooth. X misses P_i exactly when w_i divides d; weight 1 is smooth.
/// Otherwise checks the A-type witness (smallest j != i with x_i^k x_j of
/// degree d, and for the other two indices p, q: w_p + w_q = 0 mod w_i and
/// gcd(w_p, w_i) = 1) and throws InternalInconsistency if it fails.
/// Expects a K3 candidate.
std::optional<CyclicSingularity> vertex_singularity(const WeightVector& w, int i);

/// The singular points in the interior of edge P_iP_j, i < j: with S the
/// monomials of degree d in x_i, x_j, there are |S| - 1 of them, each of
/// order h = gcd(w_i, w_j). Throws std::invalid_argument unless i < j and
/// h > 1; throws InternalInconsistency when S is empty or the transverse
/// congruence fails.
std::optional<CyclicSingularity> edge_singularities(const WeightVector& w, int i,
                                                    int j);

/// Every vertex and edge singularity of a K3 candidate, vertices first.
std::vector<CyclicSingularity> singular_points(const WeightVector& w);

/// Aggregated singularity data. Throws std::invalid_argument if w is not a
/// K3 candidate.
SingularityData singularity_data(const WeightVector& w);

/// Default prime for the finite-field oracle (2^31 - 1).
inline constexpr std::uint64_t kOraclePrime = 2147483647ULL;

/// Independent count of the singular points on edge P_iP_j. Draws random
/// nonzero coefficients mod `prime` for every monomial of degree d in x_i,
/// x_j, restricts to the edge parameter t = x_i^(w_j/h) / x_j^(w_i/h), and
/// counts the distinct nonzero roots of the resulting polynomial over the
/// algebraic closure of F_prime via its squarefree part. A draw with a
/// repeated root is retried with the next seed; after a bounded number of
/// retries throws std::runtime_error.
///
/// Requires h = gcd(w_i, w_j) > 1 and prime > d (std::invalid_argument).
std::int64_t finite_field_edge_oracle(const WeightVector& w, int i, int j,
                                      std::uint64_t prime, std::uint64_t seed);

/// Singularity data assembled from the vertex divisibility rule and the
/// finite-field edge counts. Used to cross-check printed data.
SingularityData oracle_singularity_data(const WeightVector& w, std::uint64_t prime,
                                        std::uint64_t seed);

}  // namespace k3inst

#endif  // K3INST_SINGULAR_H_
