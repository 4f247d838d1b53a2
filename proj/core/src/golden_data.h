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

#ifndef K3INST_SRC_GOLDEN_DATA_H_
#define K3INST_SRC_GOLDEN_DATA_H_

#include <array>
#include <cstdint>

namespace k3inst::internal {

struct PrintedRow {
  int label;
  std::array<std::int64_t, 4> weights;
  std::int64_t degree;
  std::int64_t dim;
  const char* singularities;  // "2xA_1, A_2" or "no singularities"
  const char* connection_degree;
};

extern const std::array<PrintedRow, 95> kPrintedRows;

}  // namespace k3inst::internal

#endif  // K3INST_SRC_GOLDEN_DATA_H_
