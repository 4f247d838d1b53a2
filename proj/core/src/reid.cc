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

#include "k3inst/reid.h"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "k3inst/golden.h"

namespace k3inst {

SurfaceRecord analyze(const WeightVector& w) {
  SurfaceRecord r;
  r.weights = w;
  r.admissibility = check_admissibility(w);
  if (const auto* row = find_golden(w)) r.label = row->label;
  if (r.admissibility.k3_candidate()) {
    r.data = singularity_data(w);
    r.invariants = compute_invariants(*r.data);
  }
  return r;
}

namespace {

void search_top_weight(std::int64_t w3, std::vector<WeightVector>& out) {
  for (std::int64_t w0 = 1; w0 <= w3; ++w0) {
    for (std::int64_t w1 = w0; w1 <= w3; ++w1) {
      for (std::int64_t w2 = w1; w2 <= w3; ++w2) {
        const auto w = normalize_weights({w0, w1, w2, w3});
        if (k3_candidate(w)) out.push_back(w);
      }
    }
  }
}

}  // namespace

std::vector<WeightVector> search(std::int64_t max_weight, unsigned threads) {
  if (max_weight < 1) throw std::invalid_argument("max weight must be >= 1");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::int64_t>(threads, max_weight));

  // Strided assignment of w3 values balances the cubic growth in work.
  std::vector<std::vector<WeightVector>> partial(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::int64_t w3 = 1 + t; w3 <= max_weight; w3 += threads) {
          search_top_weight(w3, partial[t]);
        }
      });
    }
  }
  std::vector<WeightVector> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SurfaceRecord> analyze_all(const std::vector<WeightVector>& weights) {
  std::vector<SurfaceRecord> out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(analyze(w));
  return out;
}

std::vector<SurfaceRecord> reproduce_records() {
  auto records = analyze_all(search(kDefaultMaxWeight));
  std::stable_sort(records.begin(), records.end(),
                   [](const SurfaceRecord& a, const SurfaceRecord& b) {
                     // Labelled rows first, by label.
                     const int la = a.label.value_or(1 << 30);
                     const int lb = b.label.value_or(1 << 30);
                     return la < lb;
                   });
  return records;
}

}  // namespace k3inst
