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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "k3inst/golden.h"

namespace k3inst {
namespace {

TEST(AmbientWellFormedTest, Examples) {
  EXPECT_TRUE(ambient_well_formed(normalize_weights({4, 5, 7, 16})));
  EXPECT_FALSE(ambient_well_formed(normalize_weights({2, 2, 2, 3})));
  EXPECT_TRUE(ambient_well_formed(normalize_weights({1, 1, 1, 1})));
  EXPECT_FALSE(ambient_well_formed(normalize_weights({2, 4, 6, 7})));
}

TEST(LinearConeTest, Examples) {
  EXPECT_FALSE(is_linear_cone(normalize_weights({1, 1, 1, 1})));
  EXPECT_FALSE(is_linear_cone(normalize_weights({7, 8, 10, 25})));
  const auto cone = WeightVector::with_degree_unchecked({1, 2, 3, 5}, 5);
  EXPECT_TRUE(is_linear_cone(cone));
  EXPECT_FALSE(k3_candidate(cone));
  EXPECT_TRUE(check_admissibility(cone).linear_cone);
}

TEST(QuasiSmoothTest, Label79WitnessForSingleton) {
  const auto w = normalize_weights({4, 5, 7, 16});
  const auto witnesses = general_member_quasi_smooth(w);
  ASSERT_TRUE(witnesses.has_value());
  ASSERT_EQ(witnesses->size(), 15U);
  const auto it = std::find_if(witnesses->begin(), witnesses->end(),
                               [](const QuasiSmoothWitness& q) {
                                 return q.subset == IndexSubset{1};
                               });
  ASSERT_NE(it, witnesses->end());
  const auto* tilted = std::get_if<TiltedMonomials>(&it->satisfied_by);
  ASSERT_NE(tilted, nullptr);
  ASSERT_EQ(tilted->entries.size(), 1U);
  EXPECT_EQ(tilted->entries[0].external, 2);
  EXPECT_EQ(tilted->entries[0].monomial.a, (std::array<std::int64_t, 4>{0, 5, 1, 0}));
  EXPECT_EQ(it->to_string(), "{1}: x1^5*x2 [x2]");
}

TEST(QuasiSmoothTest, AllPureForFermatQuartic) {
  const auto witnesses = general_member_quasi_smooth(normalize_weights({1, 1, 1, 1}));
  ASSERT_TRUE(witnesses.has_value());
  for (const auto& q : *witnesses) {
    EXPECT_TRUE(std::holds_alternative<PureMonomial>(q.satisfied_by)) << q.to_string();
  }
}

TEST(QuasiSmoothTest, PurePreferredWithLexTieBreak) {
  const auto witnesses = general_member_quasi_smooth(normalize_weights({4, 5, 7, 16}));
  ASSERT_TRUE(witnesses.has_value());
  for (const auto& q : *witnesses) {
    if (q.subset == IndexSubset{0, 3}) {
      const auto* pure = std::get_if<PureMonomial>(&q.satisfied_by);
      ASSERT_NE(pure, nullptr);
      EXPECT_EQ(pure->monomial.a, (std::array<std::int64_t, 4>{0, 0, 0, 2}));
    }
  }
}

TEST(QuasiSmoothTest, Label33AndRejection) {
  EXPECT_TRUE(general_member_quasi_smooth(normalize_weights({1, 4, 6, 11})).has_value());
  // (1,2,3,4), d = 10: {2} has no pure monomial but x0*x2^3 works.
  EXPECT_TRUE(general_member_quasi_smooth(normalize_weights({1, 2, 3, 4})).has_value());
  // (1,1,3,7): d = 12; {3} (weight 7): 12, 11, 11, 9 never multiples of 7.
  EXPECT_FALSE(general_member_quasi_smooth(normalize_weights({1, 1, 3, 7})).has_value());
  EXPECT_FALSE(check_admissibility(normalize_weights({1, 1, 3, 7})).quasi_smooth);
}

TEST(HypersurfaceWellFormedTest, Examples) {
  EXPECT_TRUE(hypersurface_well_formed(normalize_weights({1, 2, 2, 5})));
  EXPECT_TRUE(hypersurface_well_formed(normalize_weights({2, 2, 3, 7})));
  EXPECT_TRUE(hypersurface_well_formed(normalize_weights({1, 1, 1, 1})));
  // gcd(2,4,6) = 2.
  EXPECT_FALSE(hypersurface_well_formed(normalize_weights({1, 2, 4, 6})));
  // (1,4,6,9): d = 20, gcd(6,9) = 3 does not divide 20 -> singular edge in X.
  EXPECT_FALSE(hypersurface_well_formed(normalize_weights({1, 4, 6, 9})));
}

TEST(K3CandidateTest, Examples) {
  EXPECT_TRUE(k3_candidate(normalize_weights({1, 4, 6, 11})));
  EXPECT_FALSE(k3_candidate(normalize_weights({2, 2, 2, 3})));
  EXPECT_TRUE(k3_candidate(normalize_weights({7, 8, 10, 25})));
  EXPECT_EQ(check_admissibility(normalize_weights({2, 2, 2, 3})).reason(),
            "ambient not well-formed");
  EXPECT_EQ(check_admissibility(normalize_weights({1, 4, 6, 11})).reason(), "");
}

TEST(K3CandidateTest, EveryGoldenRowIsACandidate) {
  for (const auto& row : golden_table()) {
    EXPECT_TRUE(k3_candidate(row.weights)) << "label " << row.label;
    EXPECT_TRUE(check_admissibility(row.weights).k3_candidate()) << "label " << row.label;
  }
}

TEST(K3CandidatePropertyTest, PermutationInvariant) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::int64_t> dist(1, 30);
  for (int trial = 0; trial < 500; ++trial) {
    WeightVector::Weights raw{dist(rng), dist(rng), dist(rng), dist(rng)};
    const bool expected = k3_candidate(normalize_weights(raw));
    std::shuffle(raw.begin(), raw.end(), rng);
    EXPECT_EQ(k3_candidate(normalize_weights(raw)), expected);
  }
}

TEST(QuasiSmoothPropertyTest, WitnessesAreWellFormed) {
  for (const auto& row : golden_table()) {
    const auto& w = row.weights;
    const auto witnesses = general_member_quasi_smooth(w);
    ASSERT_TRUE(witnesses.has_value()) << row.label;
    for (const auto& q : *witnesses) {
      if (const auto* pure = std::get_if<PureMonomial>(&q.satisfied_by)) {
        EXPECT_TRUE(pure->monomial.supported_in(q.subset));
        EXPECT_EQ(weighted_degree(pure->monomial, w), w.degree());
        continue;
      }
      const auto& tilted = std::get<TiltedMonomials>(q.satisfied_by);
      ASSERT_EQ(tilted.entries.size(), static_cast<std::size_t>(q.subset.size()));
      std::set<int> externals;
      for (const auto& t : tilted.entries) {
        EXPECT_FALSE(q.subset.contains(t.external));
        externals.insert(t.external);
        EXPECT_EQ(weighted_degree(t.monomial, w), w.degree());
        ExponentVector base = t.monomial;
        base.a[static_cast<std::size_t>(t.external)] -= 1;
        EXPECT_TRUE(base.supported_in(q.subset));
      }
      EXPECT_EQ(externals.size(), tilted.entries.size());
    }
  }
}

TEST(HypersurfaceWellFormedPropertyTest, SingularEdgeOrderDividesDegree) {
  for (const auto& row : golden_table()) {
    const auto& w = row.weights;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const auto h = std::gcd(w[i], w[j]);
        if (h > 1) EXPECT_EQ(w.degree() % h, 0) << row.label;
      }
    }
  }
}

}  // namespace
}  // namespace k3inst
