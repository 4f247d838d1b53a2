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

#include "k3inst/hypersurface.h"

#include <numeric>
#include <sstream>

namespace k3inst {

std::string QuasiSmoothWitness::to_string() const {
  std::ostringstream os;
  os << subset.to_string() << ": ";
  if (const auto* pure = std::get_if<PureMonomial>(&satisfied_by)) {
    os << pure->monomial.to_string();
  } else {
    const auto& tilted = std::get<TiltedMonomials>(satisfied_by);
    bool first = true;
    for (const auto& t : tilted.entries) {
      if (!first) os << ", ";
      os << t.monomial.to_string() << " [x" << t.external << "]";
      first = false;
    }
  }
  return os.str();
}

bool ambient_well_formed(const WeightVector& w) {
  for (int skip = 0; skip < kNumVariables; ++skip) {
    std::int64_t g = 0;
    for (int i = 0; i < kNumVariables; ++i) {
      if (i != skip) g = std::gcd(g, w[i]);
    }
    if (g != 1) return false;
  }
  return true;
}

bool is_linear_cone(const WeightVector& w) {
  for (int i = 0; i < kNumVariables; ++i) {
    if (w[i] == w.degree()) return true;
  }
  return false;
}

namespace {

std::optional<QuasiSmoothWitness> witness_for(const WeightVector& w,
                                              const IndexSubset& subset) {
  const auto d = w.degree();
  const auto pure = enumerate_monomials(w, d, subset);
  if (!pure.empty()) {
    return QuasiSmoothWitness{subset, PureMonomial{pure.front()}};
  }
  TiltedMonomials tilted;
  const auto needed = static_cast<std::size_t>(subset.size());
  for (int e = 0; e < kNumVariables && tilted.entries.size() < needed; ++e) {
    if (subset.contains(e)) continue;
    const auto base = enumerate_monomials(w, d - w[e], subset);
    if (base.empty()) continue;
    ExponentVector m = base.front();
    m.a[static_cast<std::size_t>(e)] += 1;
    tilted.entries.push_back({m, e});
  }
  if (tilted.entries.size() < needed) return std::nullopt;
  return QuasiSmoothWitness{subset, std::move(tilted)};
}

// Existence-only version of witness_for, for the search hot path.
bool subset_quasi_smooth(const WeightVector& w, const IndexSubset& subset) {
  const auto d = w.degree();
  if (has_monomial(w, d, subset)) return true;
  int found = 0;
  for (int e = 0; e < kNumVariables; ++e) {
    if (!subset.contains(e) && has_monomial(w, d - w[e], subset)) ++found;
  }
  return found >= subset.size();
}

// Singletons first: they reject most tuples.
const std::vector<IndexSubset>& subsets_by_size() {
  static const std::vector<IndexSubset> kOrder = [] {
    std::vector<IndexSubset> out;
    for (int size = 1; size <= kNumVariables; ++size) {
      for (const auto& s : IndexSubset::all()) {
        if (s.size() == size) out.push_back(s);
      }
    }
    return out;
  }();
  return kOrder;
}

bool is_quasi_smooth(const WeightVector& w) {
  for (const auto& s : subsets_by_size()) {
    if (!subset_quasi_smooth(w, s)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<QuasiSmoothWitness>> general_member_quasi_smooth(
    const WeightVector& w) {
  std::vector<QuasiSmoothWitness> out;
  for (const auto& subset : IndexSubset::all()) {
    auto witness = witness_for(w, subset);
    if (!witness) return std::nullopt;
    out.push_back(std::move(*witness));
  }
  return out;
}

bool hypersurface_well_formed(const WeightVector& w) {
  if (!ambient_well_formed(w)) return false;
  for (int i = 0; i < kNumVariables; ++i) {
    for (int j = i + 1; j < kNumVariables; ++j) {
      if (std::gcd(w[i], w[j]) > 1 && !has_monomial(w, w.degree(), IndexSubset{i, j})) {
        return false;
      }
    }
  }
  return true;
}

std::string Admissibility::reason() const {
  if (!ambient_well_formed) return "ambient not well-formed";
  if (!hypersurface_well_formed) return "hypersurface not well-formed";
  if (!quasi_smooth) return "general member not quasi-smooth";
  if (linear_cone) return "linear cone";
  return "";
}

Admissibility check_admissibility(const WeightVector& w) {
  Admissibility a;
  a.ambient_well_formed = ambient_well_formed(w);
  a.hypersurface_well_formed = a.ambient_well_formed && hypersurface_well_formed(w);
  a.quasi_smooth = is_quasi_smooth(w);
  a.linear_cone = is_linear_cone(w);
  return a;
}

bool k3_candidate(const WeightVector& w) {
  return ambient_well_formed(w) && !is_linear_cone(w) &&
         hypersurface_well_formed(w) && is_quasi_smooth(w);
}

}  // namespace k3inst
