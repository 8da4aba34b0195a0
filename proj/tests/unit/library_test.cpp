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

namespace layerq {
namespace {

TEST(Library, LayeredReducibleAmplitudes) {
  const auto s = states::layered_reducible();
  EXPECT_EQ(s.dims(), (Dims{4, 4, 2}));
  for (const IndexTuple t : {IndexTuple{0, 0, 0}, IndexTuple{2, 2, 0}, IndexTuple{1, 1, 1}, IndexTuple{3, 3, 1}})
    EXPECT_NEAR(s.amplitude(t).real(), 0.5, 1e-15);
}

TEST(Library, BasisDependentResourceSign) {
  const auto s = states::basis_dependent_resource();
  EXPECT_NEAR(s.amplitude(IndexTuple{3, 3, 1}).real(), -0.5, 1e-15);
  EXPECT_EQ(s.labels(), (Labels{"A", "B1", "B2"}));
}

TEST(Library, ControlledResourceNormBeforeNormalization) {
  // sum_j |u_j>|j>|u_j> - 2|333>, with u_j the real mutually unbiased vectors
  const double u[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  double direct = 0;
  for (int a = 0; a < 4; ++a)
    for (int j = 0; j < 4; ++j)
      for (int b = 0; b < 4; ++b) {
        double amp = u[j][a] * u[j][b] / 4;
        if (a == 3 && j == 3 && b == 3) amp -= 2;
        direct += amp * amp;
      }
  EXPECT_NEAR(direct, 7.0, 1e-12);
  const auto raw = amplitude_vector<double>({4, 4, 4}, controlled_resource_terms());
  EXPECT_NEAR(raw.squaredNorm(), 7.0, 1e-12);
  const auto s = states::controlled_resource();
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  EXPECT_EQ(s.labels(), (Labels{"A", "C", "B"}));
}

TEST(Library, BuiltinNames) {
  for (const auto& name : builtin_state_names()) EXPECT_TRUE(builtin_state(name).has_value()) << name;
  EXPECT_FALSE(builtin_state("eq9").has_value());
  EXPECT_THROW(load_state("no-such-state"), std::invalid_argument);
}

TEST(Library, StateTextRoundTrip) {
  for (const auto& name : builtin_state_names()) {
    const auto s = *builtin_state(name);
    const auto back = parse_state_text(format_state_text(s));
    EXPECT_EQ(back.dims(), s.dims());
    EXPECT_EQ(back.labels(), s.labels());
    EXPECT_NEAR((back.amplitudes() - s.amplitudes()).norm(), 0.0, 1e-14) << name;
  }
}

TEST(Library, StateTextParsing) {
  const auto s = parse_state_text("# comment\ndims 2 2\n0,0 1 0\n1,1 0 1  # trailing\n");
  EXPECT_NEAR(std::abs(s.amplitude(IndexTuple{1, 1}) - std::complex<double>(0, 1 / std::sqrt(2.0))), 0.0, 1e-15);
  EXPECT_THROW(parse_state_text("0,0 1 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_state_text("dims 2\n0 x 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_state_text("dims 2\n0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_state_text("dims 2\n2 1 0\n"), std::out_of_range);
  EXPECT_THROW(parse_state_text("dims 2\n0 0 0\n"), std::invalid_argument);
}

TEST(Library, LoadStateFile) {
  const auto s = load_state(std::string(LAYERQ_TEST_DATA) + "/ghz_plus.state");
  EXPECT_NEAR(std::abs(inner_product(s, states::ghz3())), 1.0, 1e-12);
}

}  // namespace
}  // namespace layerq
