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

#include "k3inst/singular.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "k3inst/errors.h"
#include "k3inst/hypersurface.h"

namespace k3inst {

std::string locus_to_string(const SingularLocus& locus) {
  if (const auto* v = std::get_if<VertexLocus>(&locus)) {
    return "P" + std::to_string(v->index);
  }
  const auto& e = std::get<EdgeLocus>(locus);
  return "P" + std::to_string(e.i) + "P" + std::to_string(e.j);
}

void SingularityData::add(std::int64_t order, std::int64_t count) {
  if (order < 2) throw std::invalid_argument("singularity order must be >= 2");
  if (count < 1) throw std::invalid_argument("singularity count must be >= 1");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), order,
                             [](const Entry& e, std::int64_t m) { return e.order < m; });
  if (it != entries_.end() && it->order == order) {
    it->count += count;
  } else {
    entries_.insert(it, Entry{order, count});
  }
}

std::int64_t SingularityData::point_count() const {
  std::int64_t k = 0;
  for (const auto& e : entries_) k += e.count;
  return k;
}

std::int64_t SingularityData::exceptional_rank() const {
  std::int64_t r = 0;
  for (const auto& e : entries_) r += e.count * (e.order - 1);
  return r;
}

std::int64_t SingularityData::count_of(std::int64_t order) const {
  for (const auto& e : entries_) {
    if (e.order == order) return e.count;
  }
  return 0;
}

std::string SingularityData::canonical() const {
  std::string s;
  for (const auto& e : entries_) {
    if (!s.empty()) s += '+';
    if (e.count != 1) s += std::to_string(e.count) + "*";
    s += "A" + std::to_string(e.order - 1);
  }
  return s;
}

namespace {

std::int64_t parse_positive(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
    throw std::invalid_argument("malformed singularity string: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

SingularityData SingularityData::parse_canonical(std::string_view text) {
  SingularityData data;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto plus = rest.find('+');
    std::string_view term = rest.substr(0, plus);
    rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus + 1);
    std::int64_t count = 1;
    if (const auto star = term.find('*'); star != std::string_view::npos) {
      count = parse_positive(term.substr(0, star), text);
      term = term.substr(star + 1);
    }
    if (term.size() < 2 || term.front() != 'A') {
      throw std::invalid_argument("malformed singularity string: '" + std::string(text) + "'");
    }
    data.add(parse_positive(term.substr(1), text) + 1, count);
    if (plus != std::string_view::npos && rest.empty()) {
      throw std::invalid_argument("malformed singularity string: '" + std::string(text) + "'");
    }
  }
  return data;
}

std::optional<CyclicSingularity> vertex_singularity(const WeightVector& w, int i) {
  if (i < 0 || i >= kNumVariables) throw std::invalid_argument("vertex index out of range");
  const std::int64_t m = w[i];
  const std::int64_t d = w.degree();
  if (m == 1 || d % m == 0) return std::nullopt;

  // Quasi-smoothness at P_i needs some x_i^k x_j of degree d; x_j is then a
  // local equation and the remaining coordinates x_p, x_q are local
  // parameters with weights (w_p, w_q) mod m.
  int j = -1;
  for (int c = 0; c < kNumVariables; ++c) {
    if (c != i && d - w[c] >= m && (d - w[c]) % m == 0) {
      j = c;
      break;
    }
  }
  const std::string where = "vertex P" + std::to_string(i) + " of " + w.to_string();
  if (j < 0) throw InternalInconsistency(where + ": no monomial x_i^k x_j of degree d");
  std::array<std::int64_t, 2> transverse{};
  std::size_t n = 0;
  for (int c = 0; c < kNumVariables; ++c) {
    if (c != i && c != j) transverse[n++] = w[c];
  }
  if ((transverse[0] + transverse[1]) % m != 0) {
    throw InternalInconsistency(where + ": transverse weights do not sum to 0 mod w_i");
  }
  if (std::gcd(transverse[0], m) != 1) {
    throw InternalInconsistency(where + ": transverse weight not coprime to w_i");
  }
  return CyclicSingularity{VertexLocus{i}, m, 1};
}

std::optional<CyclicSingularity> edge_singularities(const WeightVector& w, int i,
                                                    int j) {
  if (i < 0 || j >= kNumVariables || i >= j) {
    throw std::invalid_argument("edge indices must satisfy 0 <= i < j <= 3");
  }
  const std::int64_t h = std::gcd(w[i], w[j]);
  if (h <= 1) throw std::invalid_argument("edge is not singular: gcd(w_i, w_j) = 1");

  const std::string where = "edge P" + std::to_string(i) + "P" + std::to_string(j) +
                            " of " + w.to_string();
  const auto solutions = enumerate_monomials(w, w.degree(), IndexSubset{i, j});
  if (solutions.empty()) {
    throw InternalInconsistency(where + ": no monomial of degree d (not well-formed)");
  }
  if (w.degree() % h != 0) throw InternalInconsistency(where + ": order does not divide d");
  std::int64_t complement = 0;
  for (int c = 0; c < kNumVariables; ++c) {
    if (c != i && c != j) complement += w[c];
  }
  if (complement % h != 0) {
    throw InternalInconsistency(where + ": transverse weights do not sum to 0 mod h");
  }
  const auto n = static_cast<std::int64_t>(solutions.size()) - 1;
  if (n == 0) return std::nullopt;
  return CyclicSingularity{EdgeLocus{i, j}, h, n};
}

std::vector<CyclicSingularity> singular_points(const WeightVector& w) {
  if (!k3_candidate(w)) {
    throw std::invalid_argument(w.to_string() + " is not a K3 candidate");
  }
  std::vector<CyclicSingularity> out;
  for (int i = 0; i < kNumVariables; ++i) {
    if (auto s = vertex_singularity(w, i)) out.push_back(*s);
  }
  for (int i = 0; i < kNumVariables; ++i) {
    for (int j = i + 1; j < kNumVariables; ++j) {
      if (std::gcd(w[i], w[j]) <= 1) continue;
      if (auto s = edge_singularities(w, i, j)) out.push_back(*s);
    }
  }
  return out;
}

SingularityData singularity_data(const WeightVector& w) {
  SingularityData data;
  for (const auto& s : singular_points(w)) data.add(s.order, s.count);
  return data;
}

}  // namespace k3inst
