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

#ifndef K3INST_EMIT_H_
#define K3INST_EMIT_H_

#include <span>
#include <string>
#include <string_view>

#include "k3inst/diff.h"
#include "k3inst/reid.h"

namespace k3inst {

enum class Format { kCsv, kMarkdown, kJson };

/// "csv" | "markdown" | "md" | "json"; throws std::invalid_argument.
Format parse_format(std::string_view name);

/// Record serialization. All three formats carry the fields
///   label,w0,w1,w2,w3,d,singularities,deg_num,deg_den,irreducibility,dim
/// with singularities in canonical form ("" when smooth in csv/json, an em
/// dash in markdown) and the degree reduced. A missing label is empty in
/// csv, null in json. Every record must be a candidate
/// (std::invalid_argument). Output ends with a newline.
std::string emit(std::span<const SurfaceRecord> records, Format format);

/// Which published table `reproduce` lays out.
enum class TableSelection { kTable1, kTable2, kBoth };

/// "1" | "2" | "both"; throws std::invalid_argument.
TableSelection parse_table_selection(std::string_view name);

/// Markdown mirrors the published layouts (Table 1: surface and dimension;
/// Table 2: singularities and degree). csv/json project the record schema
/// onto the selected table's columns; kBoth is the full schema.
std::string emit_tables(std::span<const SurfaceRecord> records,
                        TableSelection table, Format format);

std::string render_diff(const DiffReport& report, Format format);

/// Report for the `analyze` subcommand, including non-candidates.
std::string render_analysis(const SurfaceRecord& record, Format format);

/// "7xA_1, A_2" or "no singularities": the transcription style of the
/// printed tables, ascending order.
std::string printed_style(const SingularityData& data);

}  // namespace k3inst

#endif  // K3INST_EMIT_H_
