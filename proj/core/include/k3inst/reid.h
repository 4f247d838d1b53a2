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

#ifndef K3INST_REID_H_
#define K3INST_REID_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "k3inst/hypersurface.h"
#include "k3inst/instanton.h"
#include "k3inst/lattice.h"
#include "k3inst/singular.h"

namespace k3inst {

/// Everything computed for one weight vector. `data` and `invariants` are
/// present exactly when the admissibility check accepts the weights.
struct SurfaceRecord {
  std::optional<int> label;  // label in the published list, if listed
  WeightVector weights;
  Admissibility admissibility;
  std::optional<SingularityData> data;
  std::optional<InstantonInvariants> invariants;

  bool is_candidate() const { return data.has_value(); }
};

/// Builds the record; throws InternalInconsistency if an accepted candidate
/// violates a derived fact.
SurfaceRecord analyze(const WeightVector& w);

/// Default bound for the exhaustive search. The largest published weight is
/// 33; the list is unchanged up to at least 100.
inline constexpr std::int64_t kDefaultMaxWeight = 40;

/// All ascending 4-tuples with w3 <= max_weight that are K3 candidates, in
/// lexicographic order. Work is split by w3 across `threads` workers (0 means
/// hardware concurrency); the result does not depend on the split. Throws
/// std::invalid_argument for max_weight < 1.
std::vector<WeightVector> search(std::int64_t max_weight, unsigned threads = 0);

/// analyze() over the given weights, in order.
std::vector<SurfaceRecord> analyze_all(const std::vector<WeightVector>& weights);

/// The search result at kDefaultMaxWeight analyzed and ordered by label;
/// any unlisted candidate follows the labelled ones.
std::vector<SurfaceRecord> reproduce_records();

}  // namespace k3inst

#endif  // K3INST_REID_H_
