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

#include "k3inst/instanton.h"

#include <random>

#include "gtest/gtest.h"
#include "k3inst/golden.h"

namespace k3inst {
namespace {

SingularityData make(std::initializer_list<std::pair<std::int64_t, std::int64_t>> entries) {
  SingularityData d;
  for (const auto& [m, c] : entries) d.add(m, c);
  return d;
}

// The same sum through the identity (m^2 - 1)/m = m - 1/m.
Rational degree_by_split(const SingularityData& data) {
  Rational total;
  for (const auto& e : data.entries()) {
    for (std::int64_t k = 0; k < e.count; ++k) {
      total += Rational(e.order);
      total -= Rational(1, e.order);
    }
  }
  return total;
}

TEST(ConnectionDegreeTest, Examples) {
  EXPECT_EQ(connection_degree(make({{2, 1}, {4, 1}, {6, 1}})), Rational(133, 12));
  EXPECT_EQ(connection_degree(SingularityData{}), Rational(0));
  EXPECT_EQ(connection_degree(make({{2, 7}, {3, 1}})), Rational(79, 6));
}

TEST(IrreducibilityTest, Examples) {
  EXPECT_TRUE(irreducibility(Rational(133, 12)).certified());
  const auto at24 = irreducibility(Rational(24));
  EXPECT_FALSE(at24.certified());
  EXPECT_EQ(at24.status, IrreducibilityCertificate::Status::kUndetermined);
  EXPECT_EQ(at24.label(), "undetermined");
  EXPECT_EQ(at24.witness_degree, Rational(24));
  EXPECT_TRUE(irreducibility(Rational(0)).certified());
  EXPECT_EQ(irreducibility(Rational(0)).label(), "certified");
}

TEST(ModuliDimensionTest, Examples) {
  EXPECT_EQ(moduli_dimension(make({{2, 1}, {4, 1}, {6, 1}})).value, 48);
  EXPECT_EQ(moduli_dimension(SingularityData{}).value, 90);
  EXPECT_EQ(moduli_dimension(make({{2, 7}, {3, 1}})).value, 38);
  EXPECT_FALSE(moduli_dimension(make({{2, 7}, {3, 1}})).out_of_theorem_scope);
}

TEST(ModuliDimensionTest, NegativeIsFlaggedNotClamped) {
  const auto dim = moduli_dimension(make({{20, 3}}));
  EXPECT_EQ(dim.value, 90 - 2 * 3 * 39);
  EXPECT_TRUE(dim.out_of_theorem_scope);
}

TEST(CertifyTest, Label33) {
  const auto w = normalize_weights({1, 4, 6, 11});
  const auto data = singularity_data(w);
  const auto inv = compute_invariants(data);
  const auto cert = certify(w, data, inv);
  EXPECT_TRUE(cert.irreducible);
  EXPECT_FALSE(cert.rigid);
  EXPECT_EQ(cert.verdict, "irreducible; dim_C M* = 48");
  EXPECT_NE(cert.text.find("133/12"), std::string::npos);
  EXPECT_NE(cert.text.find("hyperkahler"), std::string::npos);
}

TEST(CertifyTest, Label1) {
  const auto w = normalize_weights({1, 1, 1, 1});
  const auto data = singularity_data(w);
  const auto cert = certify(w, data, compute_invariants(data));
  EXPECT_TRUE(cert.irreducible);
  EXPECT_EQ(cert.verdict, "irreducible; dim_C M* = 90");
}

TEST(CertifyTest, DegreeTwentyFourIsUndetermined) {
  // No candidate reaches 24; 16 points of order 2 give 16 * 3/2 = 24.
  SingularityData data;
  data.add(2, 16);
  const auto inv = compute_invariants(data);
  ASSERT_EQ(inv.degree, Rational(24));
  const auto w = normalize_weights({1, 1, 1, 1});
  EXPECT_THROW(certify(w, data, inv), std::invalid_argument);
  const auto cert = summarize_certification(w, data, inv);
  EXPECT_FALSE(cert.irreducible);
  EXPECT_NE(cert.verdict.find("undetermined"), std::string::npos);
}

TEST(CertifyTest, InconsistentInputsAreRejected) {
  const auto w = normalize_weights({1, 4, 6, 11});
  const auto other = singularity_data(normalize_weights({1, 1, 1, 1}));
  EXPECT_THROW(certify(w, other, compute_invariants(other)), std::invalid_argument);
}

TEST(CertifyTest, RigidCaseIsFlagged) {
  // The dimension formula hits 0 on the printed data of label 79.
  const auto* row = find_golden(79);
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(moduli_dimension(row->table_singularities).value, 0);
}

TEST(InstantonPropertyTest, BothDegreeRoutesAgreeAndParityIsEven) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::int64_t> order(2, 25);
  std::uniform_int_distribution<std::int64_t> count(1, 8);
  std::uniform_int_distribution<int> size(0, 5);
  for (int trial = 0; trial < 500; ++trial) {
    SingularityData d;
    for (int k = size(rng); k > 0; --k) d.add(order(rng), count(rng));
    EXPECT_EQ(connection_degree(d), degree_by_split(d));
    EXPECT_EQ(moduli_dimension(d).value % 2, 0);
  }
}

TEST(InstantonPropertyTest, AddingAPointIsMonotone) {
  std::mt19937 rng(43);
  std::uniform_int_distribution<std::int64_t> order(2, 25);
  for (int trial = 0; trial < 500; ++trial) {
    SingularityData d;
    for (int k = 0; k < trial % 5; ++k) d.add(order(rng));
    const std::int64_t m = order(rng);
    SingularityData bigger = d;
    bigger.add(m);
    EXPECT_EQ(moduli_dimension(bigger).value, moduli_dimension(d).value - 2 * (2 * m - 1));
    EXPECT_GT(connection_degree(bigger), connection_degree(d));
  }
}

TEST(InstantonPropertyTest, GoldenRowsAreCertified) {
  for (const auto& row : golden_table()) {
    const auto inv = compute_invariants(singularity_data(row.weights));
    EXPECT_TRUE(inv.certificate.certified()) << row.label;
    EXPECT_NE(inv.degree, Rational(24));
    EXPECT_GE(inv.dim.value, 0);
    EXPECT_LE(inv.dim.value, 90);
  }
}

}  // namespace
}  // namespace k3inst
