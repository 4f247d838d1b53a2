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

#ifndef K3INST_DIFF_H_
#define K3INST_DIFF_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "k3inst/golden.h"
#include "k3inst/reid.h"

namespace k3inst {

enum class DiffField { kSingularities, kDegree, kDimension };

std::string field_name(DiffField f);  // "singularities", "degree", "dim"

struct FieldMismatch {
  DiffField field;
  std::string computed;
  std::string table;
};

/// Comparison of one label, plus diagnostics computed from the printed row
/// alone.
struct LabelDiff {
  int label;
  WeightVector weights;
  std::vector<FieldMismatch> mismatches;

  // Dimension formula applied to the printed singularities vs printed dim.
  std::int64_t dim_from_table_singularities;
  bool table_dim_inconsistent;
  // Degree formula applied to the printed singularities vs printed degree.
  Rational degree_from_table_singularities;
  bool table_degree_inconsistent;
  // Printed singularities exceed sum (m - 1) <= 19.
  std::int64_t table_exceptional_rank;
  bool table_rank_bound_violated;
  // Vertex rule + finite-field edge counts vs printed singularities.
  SingularityData oracle_data;
  bool oracle_disagrees_with_table;

  bool match() const { return mismatches.empty(); }
  /// True if any diagnostic fires.
  bool flagged() const {
    return table_dim_inconsistent || table_degree_inconsistent ||
           table_rank_bound_violated || oracle_disagrees_with_table;
  }
};

struct DiffSummary {
  int labels = 0;
  int matches = 0;
  int mismatches = 0;
  int singularity_mismatches = 0;
  int degree_mismatches = 0;
  int dimension_mismatches = 0;
  int table_dim_inconsistencies = 0;
  int table_degree_inconsistencies = 0;
  int rank_bound_violations = 0;
  int oracle_disagreements = 0;
  int unflagged_mismatches = 0;
};

struct DiffReport {
  std::vector<LabelDiff> rows;  // ascending label, each label once
  DiffSummary summary;
};

struct DiffOptions {
  std::uint64_t prime = kOraclePrime;
  std::uint64_t seed = 1;
};

/// Field-by-field comparison of computed records against the golden rows.
/// Both sides must cover the same set of weight vectors and every record
/// must be a candidate (std::invalid_argument otherwise). Golden data is
/// only read.
DiffReport diff(std::span<const SurfaceRecord> computed,
                std::span<const GoldenRow> golden, const DiffOptions& options = {});

}  // namespace k3inst

#endif  // K3INST_DIFF_H_
