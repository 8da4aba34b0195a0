// Copyright 2026 The layerq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "layerq/qudit.hpp"
#include "oracle.hpp"

namespace layerq {
namespace {

BasisAssignment all(BasisKind kind, const Dims& dims) {
  BasisAssignment out;
  for (int d : dims) out.push_back(basis<double>(kind, d));
  return out;
}

TEST(Measure, JointDistributionMatchesBruteForceOnRandomStates) {
  Rng rng(2024);
  for (const Dims& dims : {Dims{4, 4, 2}, Dims{2, 3}, Dims{4, 4, 4}, Dims{2, 2, 2, 2}}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto s = testing::random_state(dims, rng);
      const auto bases = testing::random_bases(dims, rng);
      const auto oracle = testing::brute_force_distribution(s, bases);
      const auto table = joint_distribution(s, bases);
      const auto born = born_probabilities(s, bases);
      double total = 0;
      for (std::size_t i = 0; i < oracle.size(); ++i) {
        EXPECT_NEAR(table.probabilities[i], oracle[i], 1e-12);
        EXPECT_NEAR(born[i], oracle[i], 1e-12);
        total += table.probabilities[i];
      }
      EXPECT_NEAR(total, 1.0, 1e-10);
    }
  }
}

TEST(Measure, BasisDependentAllComputational) {
  const auto t = joint_distribution(states::basis_dependent_resource(), all(BasisKind::computational, {4, 4, 2}));
  const auto support = t.support();
  ASSERT_EQ(support.size(), 4u);
  const std::vector<IndexTuple> expected{{0, 0, 0}, {1, 1, 1}, {2, 2, 0}, {3, 3, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(support[i].first, expected[i]);
    EXPECT_NEAR(support[i].second, 0.25, 1e-12);
  }
}

TEST(Measure, BasisDependentAllConjugateIsUniformOver32) {
  const BasisAssignment b{basis<double>(BasisKind::mub4, 4), basis<double>(BasisKind::mub4, 4),
                          basis<double>(BasisKind::fourier, 2)};
  const auto t = joint_distribution(states::basis_dependent_resource(), b);
  const auto support = t.support();
  ASSERT_EQ(support.size(), 32u);
  for (const auto& [o, p] : support) EXPECT_NEAR(p, 1.0 / 32, 1e-12);
}

TEST(Measure, ControlledResourceMiddleMarginal) {
  const BasisAssignment b{basis<double>(BasisKind::mub4, 4), basis<double>(BasisKind::computational, 4),
                          basis<double>(BasisKind::mub4, 4)};
  const auto s = states::controlled_resource();
  const auto t = joint_distribution(s, b);
  const auto m = t.marginal(1);
  EXPECT_NEAR(m[3], 4.0 / 7, 1e-12);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(m[i], 1.0 / 7, 1e-12);

  // conditional on C = 3, Alice and Bob in the computational basis: (|u3 u3> - 2|33>)/2
  const auto proj = project_subsystem(s, 1, basis<double>(BasisKind::computational, 4), 3);
  const auto ab = joint_distribution(proj.remainder, all(BasisKind::computational, {4, 4}));
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) {
      const IndexTuple t2{a, c};
      EXPECT_NEAR(ab.probability(t2), a == 3 && c == 3 ? 49.0 / 64 : 1.0 / 64, 1e-12);
    }
}

TEST(Measure, ProjectionOntoKeyBranchLeavesProductOfMubVectors) {
  const auto s = states::controlled_resource();
  const auto mub = basis<double>(BasisKind::mub4, 4);
  for (int i = 0; i < 3; ++i) {
    const auto proj = project_subsystem(s, 1, basis<double>(BasisKind::computational, 4), i);
    EXPECT_NEAR(proj.probability, 1.0 / 7, 1e-12);
    const auto expected = product_basis_state<double>({mub, mub}, {i, i});
    EXPECT_NEAR(std::abs(inner_product(expected, proj.remainder)), 1.0, 1e-12);
  }
  const auto p3 = project_subsystem(s, 1, basis<double>(BasisKind::computational, 4), 3);
  EXPECT_NEAR(p3.probability, 4.0 / 7, 1e-12);
  // remainder equals (|u3 u3> - 2|33>)/2
  auto terms = std::vector<Term>{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) terms.push_back({{a, b}, mub.vectors(a, 3) * mub.vectors(b, 3) / 2.0});
  terms.push_back({{3, 3}, -1.0});
  const auto expected = PureState(Dims{4, 4}, amplitude_vector<double>({4, 4}, terms));
  EXPECT_NEAR(std::abs(inner_product(expected, p3.remainder)), 1.0, 1e-12);
}

TEST(Measure, ProjectionProbabilitiesSumToOne) {
  Rng rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const auto s = testing::random_state({4, 2, 3}, rng);
    for (std::size_t k = 0; k < 3; ++k) {
      const int d = s.dims()[k];
      const auto b = basis<double>(BasisKind::fourier, d);
      double total = 0;
      for (int o = 0; o < d; ++o) total += project_subsystem(s, k, b, o).probability;
      EXPECT_NEAR(total, 1.0, 1e-10);
    }
  }
}

TEST(Measure, ZeroProbabilityProjection) {
  const auto s = basis_state<double>({2, 2}, {0, 0});
  EXPECT_THROW(project_subsystem(s, 1, basis<double>(BasisKind::computational, 2), 1), ZeroProbabilityBranch);
  EXPECT_THROW(project_subsystem(s, 2, basis<double>(BasisKind::computational, 2), 0), std::invalid_argument);
  EXPECT_THROW(project_subsystem(s, 0, basis<double>(BasisKind::computational, 4), 0), std::invalid_argument);
}

TEST(Measure, DimensionMismatch) {
  const auto s = states::bell();
  EXPECT_THROW(joint_distribution(s, all(BasisKind::computational, {2, 4})), std::invalid_argument);
  EXPECT_THROW(joint_distribution(s, all(BasisKind::computational, {2})), std::invalid_argument);
}

TEST(Measure, BellInFourierAlwaysAgrees) {
  Rng rng(8);
  const auto b = all(BasisKind::fourier, {2, 2});
  for (int i = 0; i < 1000; ++i) {
    const auto m = measure(states::bell(), b, rng);
    EXPECT_EQ(m.outcome[0], m.outcome[1]);
  }
}

TEST(Measure, EigenstateIsCertain) {
  Rng rng(1);
  const auto s = basis_state<double>({2}, {0});
  for (int i = 0; i < 100; ++i) EXPECT_EQ(measure(s, all(BasisKind::computational, {2}), rng).outcome[0], 0);
}

TEST(Measure, CollapseIsProductBasisVector) {
  Rng rng(4);
  const auto s = states::basis_dependent_resource();
  const BasisAssignment b{basis<double>(BasisKind::mub4, 4), basis<double>(BasisKind::computational, 4),
                          basis<double>(BasisKind::fourier, 2)};
  const auto m = measure(s, b, rng);
  const auto expected = product_basis_state(b, m.outcome);
  EXPECT_NEAR(std::abs(inner_product(expected, m.collapsed)), 1.0, 1e-12);
}

TEST(Measure, SamplerConvergesWithinBound) {
  Rng rng(99);
  for (const Dims& dims : {Dims{4, 4, 2}, Dims{2, 2}, Dims{3, 4}}) {
    const auto s = testing::random_state(dims, rng);
    const auto bases = testing::random_bases(dims, rng);
    const auto oracle = testing::brute_force_distribution(s, bases);
    const Sampler sampler(s, bases);
    const std::size_t n = 200000;
    std::vector<double> freq(oracle.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i) freq[sampler.sample_flat(rng)] += 1.0 / n;
    EXPECT_LT(testing::tv(freq, oracle), 5 * std::sqrt(static_cast<double>(oracle.size()) / n));
  }
}

TEST(Measure, MeasureMatchesOracleOnBasisDependentResource) {
  Rng rng(7);
  const auto s = states::basis_dependent_resource();
  const auto b = all(BasisKind::computational, {4, 4, 2});
  const auto oracle = testing::brute_force_distribution(s, b);
  const std::size_t n = 50000;
  std::vector<double> freq(oracle.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) freq[flat_index(s.dims(), measure(s, b, rng).outcome)] += 1.0 / n;
  EXPECT_LT(testing::tv(freq, oracle), 5 * std::sqrt(32.0 / n));
}

TEST(Measure, TotalVariation) {
  EXPECT_DOUBLE_EQ(total_variation<double>({1, 0}, {0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(total_variation<double>({0.5, 0.5}, {0.5, 0.5}), 0.0);
  EXPECT_THROW(total_variation<double>({1}, {0.5, 0.5}), std::invalid_argument);
}

TEST(Random, RoundGeneratorsAreDeterministicAndDistinct) {
  auto a = round_rng(1, 5), b = round_rng(1, 5), c = round_rng(1, 6), d = round_rng(2, 5);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, d());
}

TEST(Random, UniformIndexCoversRange) {
  Rng rng(0);
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 30000; ++i) ++counts[uniform_index(rng, 3)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

}  // namespace
}  // namespace layerq
