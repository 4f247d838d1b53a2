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

#include "k3inst/diff.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace k3inst {

std::string field_name(DiffField f) {
  switch (f) {
    case DiffField::kSingularities:
      return "singularities";
    case DiffField::kDegree:
      return "degree";
    case DiffField::kDimension:
      return "dim";
  }
  return "?";
}

namespace {

constexpr std::int64_t kMaxExceptionalRank = 19;

std::string or_none(const SingularityData& d) {
  return d.empty() ? "none" : d.canonical();
}

}  // namespace

DiffReport diff(std::span<const SurfaceRecord> computed,
                std::span<const GoldenRow> golden, const DiffOptions& options) {
  std::map<WeightVector, const SurfaceRecord*> by_weights;
  for (const auto& r : computed) {
    if (!r.is_candidate()) {
      throw std::invalid_argument("diff: " + r.weights.to_string() +
                                  " is not a K3 candidate");
    }
    if (!by_weights.emplace(r.weights, &r).second) {
      throw std::invalid_argument("diff: duplicate record for " + r.weights.to_string());
    }
  }
  if (by_weights.size() != golden.size()) {
    throw std::invalid_argument("diff: computed and golden sides have different sizes");
  }

  DiffReport report;
  for (const auto& row : golden) {
    const auto it = by_weights.find(row.weights);
    if (it == by_weights.end()) {
      throw std::invalid_argument("diff: no computed record for label " +
                                  std::to_string(row.label) + " " +
                                  row.weights.to_string());
    }
    const SurfaceRecord& rec = *it->second;
    LabelDiff ld;
    ld.label = row.label;
    ld.weights = row.weights;

    if (*rec.data != row.table_singularities) {
      ld.mismatches.push_back({DiffField::kSingularities, or_none(*rec.data),
                               or_none(row.table_singularities)});
    }
    if (rec.invariants->degree != row.table_degree) {
      ld.mismatches.push_back({DiffField::kDegree, rec.invariants->degree.to_string(),
                               row.printed_degree});
    }
    if (rec.invariants->dim.value != row.table_dim) {
      ld.mismatches.push_back({DiffField::kDimension,
                               std::to_string(rec.invariants->dim.value),
                               std::to_string(row.table_dim)});
    }

    ld.dim_from_table_singularities = moduli_dimension(row.table_singularities).value;
    ld.table_dim_inconsistent = ld.dim_from_table_singularities != row.table_dim;
    ld.degree_from_table_singularities = connection_degree(row.table_singularities);
    ld.table_degree_inconsistent = ld.degree_from_table_singularities != row.table_degree;
    ld.table_exceptional_rank = row.table_singularities.exceptional_rank();
    ld.table_rank_bound_violated = ld.table_exceptional_rank > kMaxExceptionalRank;
    ld.oracle_data = oracle_singularity_data(row.weights, options.prime, options.seed);
    ld.oracle_disagrees_with_table = ld.oracle_data != row.table_singularities;

    report.rows.push_back(std::move(ld));
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const LabelDiff& a, const LabelDiff& b) { return a.label < b.label; });

  auto& s = report.summary;
  for (const auto& ld : report.rows) {
    ++s.labels;
    if (ld.match()) {
      ++s.matches;
    } else {
      ++s.mismatches;
      if (!ld.flagged()) ++s.unflagged_mismatches;
    }
    for (const auto& m : ld.mismatches) {
      switch (m.field) {
        case DiffField::kSingularities:
          ++s.singularity_mismatches;
          break;
        case DiffField::kDegree:
          ++s.degree_mismatches;
          break;
        case DiffField::kDimension:
          ++s.dimension_mismatches;
          break;
      }
    }
    s.table_dim_inconsistencies += ld.table_dim_inconsistent;
    s.table_degree_inconsistencies += ld.table_degree_inconsistent;
    s.rank_bound_violations += ld.table_rank_bound_violated;
    s.oracle_disagreements += ld.oracle_disagrees_with_table;
  }
  return report;
}

}  // namespace k3inst
