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
#include <numbers>

#include "layerq/qudit.hpp"

namespace layerq {
namespace {

TEST(Basis, AllOrthonormal) {
  for (int d = 1; d <= 8; ++d) {
    EXPECT_LT(basis<double>(BasisKind::computational, d).orthonormality_error(), 1e-12) << d;
    EXPECT_LT(basis<double>(BasisKind::fourier, d).orthonormality_error(), 1e-12) << d;
  }
  EXPECT_LT(basis<double>(BasisKind::mub4, 4).orthonormality_error(), 1e-12);
}

TEST(Basis, FourierComponents) {
  for (int d : {2, 3, 4, 5}) {
    const auto b = basis<double>(BasisKind::fourier, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const auto expected = std::polar(1.0 / std::sqrt(d), 2 * std::numbers::pi * i * j / d);
        EXPECT_NEAR(std::abs(b.vectors(j, i) - expected), 0.0, 1e-12);
      }
  }
}

TEST(Basis, FourierTwoIsPlusMinus) {
  const auto b = basis<double>(BasisKind::fourier, 2);
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(b.vectors(0, 0).real(), r, 1e-15);
  EXPECT_NEAR(b.vectors(1, 0).real(), r, 1e-15);
  EXPECT_NEAR(b.vectors(0, 1).real(), r, 1e-15);
  EXPECT_NEAR(b.vectors(1, 1).real(), -r, 1e-15);
}

TEST(Basis, MubFourVectorOne) {
  const auto b = basis<double>(BasisKind::mub4, 4);
  const double expected[] = {0.5, -0.5, 0.5, -0.5};
  for (int j = 0; j < 4; ++j) EXPECT_EQ(b.vectors(j, 1), std::complex<double>(expected[j]));
}

TEST(Basis, MubFourIsQubitPlusMinusProducts) {
  const auto pm = basis<double>(BasisKind::fourier, 2);
  const auto mub = basis<double>(BasisKind::mub4, 4);
  // u_0 = |++>, u_1 = |+->, u_2 = |-+>, u_3 = |-->
  for (int j = 0; j < 4; ++j)
    for (int x = 0; x < 4; ++x)
      EXPECT_NEAR(std::abs(mub.vectors(x, j) - pm.vectors(x >> 1, j >> 1) * pm.vectors(x & 1, j & 1)), 0.0, 1e-15);
}

TEST(Basis, MubRequiresFour) {
  EXPECT_THROW(basis<double>(BasisKind::mub4, 2), std::invalid_argument);
  EXPECT_THROW(basis<double>(BasisKind::fourier, 0), std::invalid_argument);
}

TEST(Basis, MutualUnbiasedness) {
  EXPECT_LT(mutual_unbiasedness(basis<double>(BasisKind::computational, 4), basis<double>(BasisKind::mub4, 4)), 1e-12);
  for (int d = 2; d <= 7; ++d)
    EXPECT_LT(mutual_unbiasedness(basis<double>(BasisKind::computational, d), basis<double>(BasisKind::fourier, d)),
              1e-12);
  EXPECT_NEAR(mutual_unbiasedness(basis<double>(BasisKind::computational, 4), basis<double>(BasisKind::computational, 4)),
              0.75, 1e-12);
  EXPECT_THROW(mutual_unbiasedness(basis<double>(BasisKind::computational, 2), basis<double>(BasisKind::fourier, 3)),
               std::invalid_argument);
}

TEST(Basis, ConjugateChoice) {
  EXPECT_EQ(conjugate_basis<double>(4).kind, BasisKind::mub4);
  EXPECT_EQ(conjugate_basis<double>(2).kind, BasisKind::fourier);
  EXPECT_EQ(basis_for(BasisChoice::computational, 4).kind, BasisKind::computational);
  EXPECT_EQ(to_string(BasisChoice::conjugate), "conj");
}

}  // namespace
}  // namespace layerq
