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

#include "gtest/gtest.h"
#include "k3inst/emit.h"

namespace k3inst {
namespace {

const LabelDiff& row(const DiffReport& report, int label) {
  return report.rows.at(static_cast<std::size_t>(label - 1));
}

class DiffTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    records_ = new std::vector<SurfaceRecord>(reproduce_records());
  }
  static void TearDownTestSuite() {
    delete records_;
    records_ = nullptr;
  }
  static std::vector<SurfaceRecord>* records_;
};

std::vector<SurfaceRecord>* DiffTest::records_ = nullptr;

TEST_F(DiffTest, EveryLabelOnceInOrder) {
  const auto report = diff(*records_, golden_table());
  ASSERT_EQ(report.rows.size(), 95U);
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    EXPECT_EQ(report.rows[k].label, static_cast<int>(k) + 1);
  }
  EXPECT_EQ(report.summary.labels, 95);
  EXPECT_EQ(report.summary.matches + report.summary.mismatches, 95);
}

TEST_F(DiffTest, Label33And1Match) {
  const auto report = diff(*records_, golden_table());
  EXPECT_TRUE(row(report, 33).match());
  EXPECT_FALSE(row(report, 33).flagged());
  EXPECT_TRUE(row(report, 1).match());
  EXPECT_FALSE(row(report, 1).flagged());
}

TEST_F(DiffTest, Label84DegreeIsInternallyInconsistent) {
  const auto report = diff(*records_, golden_table());
  const auto& ld = row(report, 84);
  EXPECT_TRUE(ld.table_degree_inconsistent);
  EXPECT_EQ(ld.degree_from_table_singularities, Rational(1411, 70));
  EXPECT_FALSE(ld.table_dim_inconsistent);
  EXPECT_EQ(ld.dim_from_table_singularities, 14);
  ASSERT_EQ(ld.mismatches.size(), 1U);
  EXPECT_EQ(ld.mismatches[0].field, DiffField::kDegree);
  EXPECT_EQ(ld.mismatches[0].computed, "1411/70");
  EXPECT_EQ(ld.mismatches[0].table, "1411/210");
}

TEST_F(DiffTest, KnownDisagreementsAreFlagged) {
  const auto report = diff(*records_, golden_table());
  std::vector<int> mismatched;
  for (const auto& ld : report.rows) {
    if (!ld.match()) {
      mismatched.push_back(ld.label);
      EXPECT_TRUE(ld.flagged()) << ld.label;
    }
  }
  EXPECT_EQ(mismatched, (std::vector<int>{31, 64, 79, 84}));
  EXPECT_EQ(report.summary.unflagged_mismatches, 0);

  EXPECT_TRUE(row(report, 79).table_rank_bound_violated);
  EXPECT_EQ(row(report, 79).table_exceptional_rank, 20);
  EXPECT_TRUE(row(report, 79).oracle_disagrees_with_table);
  EXPECT_EQ(row(report, 79).oracle_data.canonical(), "2*A3+A4+A6");
  EXPECT_TRUE(row(report, 64).oracle_disagrees_with_table);
  EXPECT_EQ(row(report, 64).oracle_data.canonical(), "2*A2+2*A3+A4");
  EXPECT_TRUE(row(report, 31).table_degree_inconsistent);
}

TEST_F(DiffTest, DeterministicAndNonMutating) {
  const auto before = std::vector<GoldenRow>(golden_table().begin(), golden_table().end());
  const auto a = render_diff(diff(*records_, golden_table()), Format::kJson);
  const auto b = render_diff(diff(*records_, golden_table()), Format::kJson);
  EXPECT_EQ(a, b);
  const auto after = golden_table();
  ASSERT_EQ(after.size(), before.size());
  for (std::size_t k = 0; k < before.size(); ++k) {
    EXPECT_EQ(after[k].table_singularities, before[k].table_singularities);
    EXPECT_EQ(after[k].table_degree, before[k].table_degree);
    EXPECT_EQ(after[k].table_dim, before[k].table_dim);
  }
  DiffOptions other;
  other.seed = 77;
  EXPECT_EQ(diff(*records_, golden_table(), other).summary.mismatches, 4);
}

TEST_F(DiffTest, KeyMismatchIsAnError) {
  auto fewer = *records_;
  fewer.pop_back();
  EXPECT_THROW(diff(fewer, golden_table()), std::invalid_argument);

  auto swapped = *records_;
  swapped.back() = analyze(normalize_weights({1, 1, 1, 1}));
  EXPECT_THROW(diff(swapped, golden_table()), std::invalid_argument);

  auto wrong = *records_;
  wrong.back() = analyze(normalize_weights({2, 2, 2, 3}));
  EXPECT_THROW(diff(wrong, golden_table()), std::invalid_argument);
}

}  // namespace
}  // namespace k3inst
