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

#include "k3inst/golden.h"

#include <charconv>
#include <stdexcept>
#include <vector>

#include "golden_data.h"

namespace k3inst {
namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::int64_t to_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed printed singularities: '" +
                                std::string(whole) + "'");
  }
  return v;
}

std::vector<GoldenRow> build_rows() {
  std::vector<GoldenRow> rows;
  rows.reserve(internal::kPrintedRows.size());
  for (const auto& p : internal::kPrintedRows) {
    GoldenRow row{p.label,
                  normalize_weights(p.weights),
                  p.dim,
                  parse_printed_singularities(p.singularities),
                  Rational::parse(p.connection_degree),
                  p.singularities,
                  p.connection_degree};
    if (row.weights.degree() != p.degree) {
      throw std::logic_error("golden row " + std::to_string(p.label) +
                             ": printed degree is not the weight sum");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SingularityData parse_printed_singularities(std::string_view text) {
  SingularityData data;
  text = strip(text);
  if (text == "no singularities") return data;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view term = strip(rest.substr(0, comma));
    std::int64_t count = 1;
    if (const auto x = term.find('x'); x != std::string_view::npos) {
      count = to_int(term.substr(0, x), text);
      term = term.substr(x + 1);
    }
    if (term.size() < 3 || term.substr(0, 2) != "A_") {
      throw std::invalid_argument("malformed printed singularities: '" +
                                  std::string(text) + "'");
    }
    data.add(to_int(term.substr(2), text) + 1, count);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return data;
}

std::span<const GoldenRow> golden_table() {
  static const std::vector<GoldenRow> kRows = build_rows();
  return kRows;
}

const GoldenRow* find_golden(const WeightVector& w) {
  for (const auto& row : golden_table()) {
    if (row.weights == w) return &row;
  }
  return nullptr;
}

const GoldenRow* find_golden(int label) {
  for (const auto& row : golden_table()) {
    if (row.label == label) return &row;
  }
  return nullptr;
}

}  // namespace k3inst
