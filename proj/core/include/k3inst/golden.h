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

#ifndef K3INST_GOLDEN_H_
#define K3INST_GOLDEN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "k3inst/lattice.h"
#include "k3inst/rational.h"
#include "k3inst/singular.h"

namespace k3inst {

/// One row of the published classification tables, as printed.
struct GoldenRow {
  int label;
  WeightVector weights;
  std::int64_t table_dim;
  SingularityData table_singularities;
  Rational table_degree;  // reduced on ingestion
  std::string printed_singularities;
  std::string printed_degree;  // e.g. "110/10", kept verbatim
};

/// The 95 rows, ordered by label. Built once; immutable and shareable.
std::span<const GoldenRow> golden_table();

/// Row for the given weights, if they appear in the table.
const GoldenRow* find_golden(const WeightVector& w);
const GoldenRow* find_golden(int label);

/// Parses the printed list form "2xA_1, A_2" (any order, repeats allowed)
/// or "no singularities". Throws std::invalid_argument.
SingularityData parse_printed_singularities(std::string_view text);

}  // namespace k3inst

#endif  // K3INST_GOLDEN_H_
