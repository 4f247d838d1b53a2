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

#include <set>

#include "gtest/gtest.h"
#include "k3inst/golden.h"

namespace k3inst {
namespace {

std::set<WeightVector> golden_weights() {
  std::set<WeightVector> out;
  for (const auto& row : golden_table()) out.insert(row.weights);
  return out;
}

TEST(GoldenTableTest, HasNinetyFiveUniqueLabels) {
  const auto rows = golden_table();
  ASSERT_EQ(rows.size(), 95U);
  std::set<int> labels;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k].label, static_cast<int>(k) + 1);
    labels.insert(rows[k].label);
  }
  EXPECT_EQ(labels.size(), 95U);
  EXPECT_EQ(golden_weights().size(), 95U);
}

TEST(GoldenTableTest, SpotRows) {
  const auto* r33 = find_golden(33);
  ASSERT_NE(r33, nullptr);
  EXPECT_EQ(r33->weights, normalize_weights({1, 4, 6, 11}));
  EXPECT_EQ(r33->table_dim, 48);
  EXPECT_EQ(r33->table_singularities.canonical(), "A1+A3+A5");
  EXPECT_EQ(r33->table_degree, Rational(133, 12));

  const auto* r1 = find_golden(1);
  ASSERT_NE(r1, nullptr);
  EXPECT_EQ(r1->weights, normalize_weights({1, 1, 1, 1}));
  EXPECT_EQ(r1->table_dim, 90);
  EXPECT_TRUE(r1->table_singularities.empty());
  EXPECT_EQ(r1->table_degree, Rational(0));

  const auto* r79 = find_golden(79);
  ASSERT_NE(r79, nullptr);
  EXPECT_EQ(r79->weights, normalize_weights({4, 5, 7, 16}));
  EXPECT_EQ(r79->table_dim, 0);
  EXPECT_EQ(r79->table_singularities.canonical(), "2*A3+2*A4+A6");
  EXPECT_EQ(r79->table_degree, Rational(1677, 70));

  // Unreduced printed fractions are normalized; the text is kept.
  const auto* r31 = find_golden(31);
  ASSERT_NE(r31, nullptr);
  EXPECT_EQ(r31->printed_degree, "110/10");
  EXPECT_EQ(r31->table_degree, Rational(11));

  EXPECT_EQ(find_golden(normalize_weights({5, 6, 7, 9}))->label, 84);
  EXPECT_EQ(find_golden(normalize_weights({2, 2, 2, 3})), nullptr);
  EXPECT_EQ(find_golden(96), nullptr);
}

TEST(GoldenTableTest, PrintedSingularityParser) {
  EXPECT_EQ(parse_printed_singularities("7xA_1, A_2").canonical(), "7*A1+A2");
  EXPECT_EQ(parse_printed_singularities("A_3, A_1, A_5").canonical(), "A1+A3+A5");
  EXPECT_TRUE(parse_printed_singularities("no singularities").empty());
  EXPECT_THROW(parse_printed_singularities("A1"), std::invalid_argument);
  EXPECT_THROW(parse_printed_singularities("2xB_1"), std::invalid_argument);
  EXPECT_THROW(parse_printed_singularities("A_1,"), std::invalid_argument);
}

TEST(SearchTest, TinyBounds) {
  EXPECT_EQ(search(1), (std::vector<WeightVector>{normalize_weights({1, 1, 1, 1})}));
  EXPECT_EQ(search(2), (std::vector<WeightVector>{normalize_weights({1, 1, 1, 1}),
                                                  normalize_weights({1, 1, 1, 2}),
                                                  normalize_weights({1, 1, 2, 2})}));
  EXPECT_THROW(search(0), std::invalid_argument);
}

TEST(SearchTest, ReproducesTheClassificationAtForty) {
  const auto found = search(kDefaultMaxWeight);
  ASSERT_EQ(found.size(), 95U);
  EXPECT_TRUE(std::is_sorted(found.begin(), found.end()));
  EXPECT_EQ(std::set<WeightVector>(found.begin(), found.end()), golden_weights());
}

TEST(SearchTest, StableAtSixtyAndIndependentOfThreadCount) {
  const auto forty = search(40, 1);
  EXPECT_EQ(search(60, 3), forty);
  EXPECT_EQ(search(40, 7), forty);
}

TEST(AnalyzeTest, CandidateAndNonCandidate) {
  const auto r = analyze(normalize_weights({1, 4, 6, 11}));
  ASSERT_TRUE(r.is_candidate());
  EXPECT_EQ(r.label, 33);
  EXPECT_EQ(r.invariants->degree, Rational(133, 12));
  EXPECT_EQ(r.invariants->dim.value, 48);

  const auto bad = analyze(normalize_weights({2, 2, 2, 3}));
  EXPECT_FALSE(bad.is_candidate());
  EXPECT_FALSE(bad.invariants.has_value());
  EXPECT_FALSE(bad.label.has_value());
  EXPECT_EQ(bad.admissibility.reason(), "ambient not well-formed");
}

TEST(ReproduceTest, OrderedByLabelAndConsistent) {
  const auto records = reproduce_records();
  ASSERT_EQ(records.size(), 95U);
  for (std::size_t k = 0; k < records.size(); ++k) {
    ASSERT_TRUE(records[k].label.has_value());
    EXPECT_EQ(*records[k].label, static_cast<int>(k) + 1);
    const auto& r = records[k];
    EXPECT_EQ(*r.data, singularity_data(r.weights));
    EXPECT_EQ(*r.invariants, compute_invariants(*r.data));
    EXPECT_EQ(r.invariants->dim.value % 2, 0);
    EXPECT_LE(r.data->exceptional_rank(), 19);
  }
}

}  // namespace
}  // namespace k3inst
