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

#include "layerq/qudit.hpp"
#include "oracle.hpp"

namespace layerq {
namespace {

TEST(Factorize, LayeredReducibleFactorsAcrossHighLowCut) {
  const auto m = decimal_to_binary_map(states::layered_reducible());
  const auto r = product_test(m, Bipartition{{0, 2}, {1, 3, 4}});
  EXPECT_TRUE(r.is_product);
  EXPECT_LE(r.ratio, 1e-10);
  ASSERT_GE(r.singular_values.size(), 1u);
  EXPECT_NEAR(r.singular_values[0], 1.0, 1e-12);
}

TEST(Factorize, LayeredIrreducibleSameCutIsMaximallyEntangled) {
  const auto m = decimal_to_binary_map(states::layered_irreducible());
  const auto r = product_test(m, Bipartition{{0, 2}, {1, 3, 4}});
  EXPECT_FALSE(r.is_product);
  EXPECT_NEAR(r.ratio, 1.0, 1e-12);
  EXPECT_NEAR(r.singular_values[0], 1 / std::sqrt(2.0), 1e-12);
}

TEST(Factorize, ProductStateEveryCut) {
  const auto s = basis_state<double>({2, 2, 2, 2, 2}, {0, 0, 0, 0, 0});
  const auto scan = reducibility_scan(s);
  EXPECT_EQ(scan.cuts.size(), 15u);
  for (const auto& c : scan.cuts) EXPECT_TRUE(c.is_product);
}

TEST(Factorize, ScanClassifiesLibraryStates) {
  EXPECT_FALSE(reducibility_scan(decimal_to_binary_map(states::layered_reducible())).irreducible());
  for (const auto& s : {states::layered_irreducible(), states::basis_dependent_resource()}) {
    const auto scan = reducibility_scan(decimal_to_binary_map(s));
    EXPECT_EQ(scan.cuts.size(), 15u);
    EXPECT_TRUE(scan.irreducible());
    EXPECT_GE(scan.min_ratio(), 1e-3);
  }
  EXPECT_TRUE(reducibility_scan(states::ghz3()).irreducible());
}

TEST(Factorize, RandomProductsAreProductAcrossTheirCut) {
  Rng rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    const auto x = testing::random_state({2, 2}, rng);
    const auto y = testing::random_state({2, 2, 2}, rng);
    const auto r = product_test(tensor_product(x, y), Bipartition{{0, 1}, {2, 3, 4}});
    EXPECT_TRUE(r.is_product) << r.ratio;
    const auto generic = product_test(testing::random_state({2, 2, 2, 2, 2}, rng), Bipartition{{0, 1}, {2, 3, 4}});
    EXPECT_FALSE(generic.is_product);
  }
}

TEST(Factorize, SingularValuesDescending) {
  Rng rng(2);
  const auto r = product_test(testing::random_state({2, 2, 2, 2}, rng), Bipartition{{0, 3}, {1, 2}});
  for (std::size_t i = 1; i < r.singular_values.size(); ++i) EXPECT_GE(r.singular_values[i - 1], r.singular_values[i]);
}

TEST(Factorize, InvalidPartitions) {
  const auto s = states::ghz3();
  EXPECT_THROW(product_test(s, Bipartition{{}, {0, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(product_test(s, Bipartition{{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(product_test(s, Bipartition{{0}, {1}}), std::invalid_argument);
  EXPECT_THROW(product_test(s, Bipartition{{0}, {1, 3}}), std::invalid_argument);
}

}  // namespace
}  // namespace layerq
