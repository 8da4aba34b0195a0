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

#include "layerq/protocol/extract.hpp"

namespace layerq {
namespace {

using BC = BasisChoice;

RoundRecord bd(std::vector<BC> bases, std::vector<int> outcomes, std::uint64_t round = 0) {
  RoundRecord r;
  r.round = round;
  r.protocol = ProtocolId::bd_ssskd;
  r.bases = std::move(bases);
  r.outcomes = std::move(outcomes);
  return r;
}

const std::vector<BC> kCCC{BC::computational, BC::computational, BC::computational};
const std::vector<BC> kJJJ{BC::conjugate, BC::conjugate, BC::conjugate};
const std::vector<BC> kCCJ{BC::computational, BC::computational, BC::conjugate};
const std::vector<BC> kJJC{BC::conjugate, BC::conjugate, BC::computational};

TEST(Extract, BinaryDecompose) {
  EXPECT_EQ(binary_decompose(3), std::make_pair(1, 1));
  EXPECT_EQ(binary_decompose(0), std::make_pair(0, 0));
  EXPECT_EQ(binary_decompose(2), std::make_pair(1, 0));
  EXPECT_EQ(binary_decompose(1), std::make_pair(0, 1));
  EXPECT_THROW(binary_decompose(4), std::out_of_range);
  EXPECT_THROW(binary_decompose(-1), std::out_of_range);
}

TEST(Extract, SecretModFour) {
  EXPECT_EQ(extract_secret_mod4(3, 3), 2);
  EXPECT_EQ(extract_secret_mod4(0, 0), 0);
  EXPECT_EQ(extract_secret_mod4(1, 2), 3);
  EXPECT_THROW(extract_secret_mod4(4, 0), std::out_of_range);
}

TEST(Extract, ComputationalModeKeys) {
  const auto ex = extract_bd({bd(kCCC, {2, 2, 0}, 5), bd(kCCC, {1, 1, 1}, 9)}, BdMode::CC_C);
  ASSERT_EQ(ex.keys.size(), 2u);
  EXPECT_TRUE(ex.secrets.empty());
  const auto& l1 = ex.keys[0];
  const auto& l2 = ex.keys[1];
  EXPECT_EQ(l1.layer, "L1");
  EXPECT_EQ(l1.symbols, (std::vector<std::vector<int>>{{1, 0}, {1, 0}}));
  EXPECT_EQ(l2.parties, (std::vector<std::string>{"alice", "bob1", "bob2"}));
  EXPECT_EQ(l2.symbols, (std::vector<std::vector<int>>{{0, 1}, {0, 1}, {0, 1}}));
  EXPECT_EQ(l2.rounds, (std::vector<std::uint64_t>{5, 9}));
}

TEST(Extract, MixedModeSecrets) {
  const auto jjc = extract_bd({bd(kJJC, {3, 0, 1})}, BdMode::JJ_C);
  ASSERT_EQ(jjc.secrets.size(), 2u);
  EXPECT_EQ(jjc.secrets[0].secrets, std::vector<int>{1});
  EXPECT_EQ(jjc.secrets[1].secrets, std::vector<int>{1});
  EXPECT_EQ(jjc.secrets[1].claimed_equal, std::vector<int>{1});
  EXPECT_TRUE(jjc.secrets[0].claimed_equal.empty());

  const auto jjj = extract_bd({bd(kJJJ, {2, 1, 0})}, BdMode::JJ_J);
  EXPECT_EQ(jjj.secrets[0].secrets, std::vector<int>{1});
  EXPECT_EQ(jjj.secrets[1].secrets, std::vector<int>{1});
  EXPECT_EQ(jjj.secrets[1].shares, (std::vector<std::vector<int>>{{0}, {1}, {0}}));

  const auto ccj = extract_bd({bd(kCCJ, {1, 1, 1})}, BdMode::CC_J);
  ASSERT_EQ(ccj.keys.size(), 1u);
  EXPECT_EQ(ccj.keys[0].source, RoundClass::key_L1);
  EXPECT_EQ(ccj.keys[0].symbols, (std::vector<std::vector<int>>{{0}, {0}}));
  EXPECT_EQ(ccj.secrets[0].secrets, std::vector<int>{0});
  EXPECT_EQ(ccj.secrets[0].claimed_equal, std::vector<int>{1});
  EXPECT_EQ(ccj.secrets[0].population, "CC-J");
}

TEST(Extract, ModeMismatchThrows) {
  EXPECT_THROW(extract_bd({bd(kJJC, {0, 0, 0})}, BdMode::CC_C), std::invalid_argument);
  EXPECT_THROW(extract_bd({bd({BC::computational, BC::conjugate, BC::computational}, {0, 0, 0})}, BdMode::CC_C),
               std::invalid_argument);
}

TEST(Extract, RecordsInModeSkipsChecks) {
  auto a = bd(kCCC, {0, 0, 0}, 0);
  a.cls = RoundClass::key_all;
  auto b = bd(kCCC, {1, 1, 1}, 1);
  b.cls = RoundClass::check;
  auto c = bd(kJJJ, {1, 1, 1}, 2);
  c.cls = RoundClass::secret;
  const auto out = records_in_mode({a, b, c}, BdMode::CC_C);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].round, 0u);
}

TEST(Extract, LayerKeys) {
  RoundRecord r;
  r.protocol = ProtocolId::p1;
  r.bases = kCCC;
  r.outcomes = {3, 3, 1};
  r.cls = RoundClass::key_all;
  auto skipped = r;
  skipped.cls = RoundClass::check;
  const auto keys = extract_layer_keys({r, skipped}, ProtocolId::p1);
  ASSERT_EQ(keys.size(), 2u);
  EXPECT_EQ(keys[0].symbols, (std::vector<std::vector<int>>{{1}, {1}}));
  EXPECT_EQ(keys[1].symbols, (std::vector<std::vector<int>>{{1}, {1}, {1}}));
  EXPECT_THROW(extract_layer_keys({r}, ProtocolId::p3), std::invalid_argument);

  r.protocol = ProtocolId::p2;
  r.cls = RoundClass::key_L1;
  const auto p2 = extract_layer_keys({r}, ProtocolId::p2);
  ASSERT_EQ(p2.size(), 3u);
  EXPECT_EQ(p2[2].source, RoundClass::key_L1);
  EXPECT_EQ(p2[2].length(), 1u);
  EXPECT_EQ(p2[0].length(), 0u);
}

TEST(Extract, ControlledSecretsAndKeys) {
  RoundRecord key;
  key.protocol = ProtocolId::c_sskd;
  key.action = CharlieAction::key;
  key.bases = {BC::conjugate, BC::computational, BC::conjugate};
  key.outcomes = {2, 2, 2};
  key.cls = RoundClass::key_all;
  RoundRecord secret = key;
  secret.action = CharlieAction::secret;
  secret.bases = {BC::computational, BC::computational, BC::computational};
  secret.outcomes = {3, 3, 3};
  secret.cls = RoundClass::secret;
  const auto ex = extract_all({key, secret}, ProtocolId::c_sskd);
  ASSERT_EQ(ex.keys.size(), 1u);
  EXPECT_EQ(ex.keys[0].alphabet, 3);
  EXPECT_EQ(ex.keys[0].symbols, (std::vector<std::vector<int>>{{2}, {2}, {2}}));
  ASSERT_EQ(ex.secrets.size(), 2u);
  EXPECT_EQ(ex.secrets[0].population, "comp");
  EXPECT_EQ(ex.secrets[0].secrets, std::vector<int>{2});
  EXPECT_TRUE(ex.secrets[1].secrets.empty());
}

}  // namespace
}  // namespace layerq
