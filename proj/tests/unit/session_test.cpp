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

#include "layerq/protocol/session.hpp"
#include "layerq/qudit.hpp"

namespace layerq {
namespace {

using BC = BasisChoice;

SessionConfig config_for(ProtocolId id, std::uint64_t rounds, std::uint64_t seed = 3) {
  SessionConfig c;
  c.protocol = id;
  c.rounds = rounds;
  c.seed = seed;
  return c;
}

RoundRecord record(ProtocolId id, std::vector<BC> bases, std::vector<int> outcomes,
                   CharlieAction action = CharlieAction::none) {
  RoundRecord r;
  r.protocol = id;
  r.bases = std::move(bases);
  r.outcomes = std::move(outcomes);
  r.action = action;
  return r;
}

TEST(Session, ShardingDoesNotChangeRecords) {
  for (auto id : all_protocols()) {
    auto c = config_for(id, 10000);
    c.eve = EveStrategy::parse(id == ProtocolId::c_sskd ? "intercept-resend:bob:random" : "intercept-resend:bob2:random");
    const Session s(c);
    EXPECT_EQ(s.run(1), s.run(8)) << to_string(id);
  }
}

TEST(Session, SeedChangesRecords) {
  const Session a(config_for(ProtocolId::bd_ssskd, 200, 1));
  const Session b(config_for(ProtocolId::bd_ssskd, 200, 2));
  EXPECT_NE(a.run(), b.run());
}

TEST(Session, BasisDependentComputationalRoundsStayOnSupport) {
  const auto oracle = joint_distribution(states::basis_dependent_resource(),
                                         BasisAssignment{basis_for(BC::computational, 4), basis_for(BC::computational, 4),
                                                         basis_for(BC::computational, 2)});
  int seen = 0;
  for (const auto& r : Session(config_for(ProtocolId::bd_ssskd, 4000)).run()) {
    if (bd_mode_of(r.bases) != BdMode::CC_C) continue;
    ++seen;
    EXPECT_GT(oracle.probability(r.outcomes), 0.1) << r.outcomes[0] << r.outcomes[1] << r.outcomes[2];
  }
  EXPECT_GT(seen, 300);
}

TEST(Session, ControlledKeyRoundsAgreeWithCharlie) {
  int seen = 0;
  for (const auto& r : Session(config_for(ProtocolId::c_sskd, 6000)).run()) {
    if (r.action != CharlieAction::key || r.bases[0] != BC::conjugate || r.bases[2] != BC::conjugate) continue;
    ++seen;
    EXPECT_LT(r.outcomes[1], 3);
    EXPECT_EQ(r.outcomes[0], r.outcomes[1]);
    EXPECT_EQ(r.outcomes[2], r.outcomes[1]);
  }
  EXPECT_GT(seen, 400);
}

TEST(Session, CharlieActionFrequencies) {
  auto c = config_for(ProtocolId::c_sskd, 20000);
  c.charlie = CharliePolicy{0.3, 0.5, 0.1, 0.1};
  std::map<CharlieAction, int> counts;
  for (const auto& r : Session(c).run()) ++counts[r.action];
  const double n = 20000;
  EXPECT_NEAR(counts[CharlieAction::secret] / n, 0.5, 5 * std::sqrt(0.25 / n));
  EXPECT_NEAR(counts[CharlieAction::key] / n, 0.3, 5 * std::sqrt(0.21 / n));
  EXPECT_NEAR(counts[CharlieAction::decoy] / n, 0.1, 5 * std::sqrt(0.09 / n));
  EXPECT_EQ(counts[CharlieAction::herald_failed], 0);
}

TEST(Session, DecoyRoundsCarryPulses) {
  for (const auto& r : Session(config_for(ProtocolId::c_sskd, 2000)).run()) {
    if (!r.is_decoy()) {
      EXPECT_TRUE(r.decoys.empty());
      continue;
    }
    ASSERT_EQ(r.decoys.size(), 2u);
    EXPECT_EQ(r.bases[1], BC::none);
    for (const auto& p : r.decoys) {
      const std::size_t party = p.target == "alice" ? 0 : 2;
      if (p.basis == r.bases[party]) EXPECT_EQ(r.outcomes[party], p.symbol);
    }
  }
}

TEST(Session, QuquartPreparationFrequency) {
  const double n = 40000;
  int twenty = 0;
  for (const auto& r : Session(config_for(ProtocolId::p2, 40000)).run())
    twenty += r.bases[0] == BC::computational && r.outcomes[0] == 2;
  EXPECT_NEAR(twenty / n, 0.125, 5 * std::sqrt(0.125 * 0.875 / n));
}

TEST(Session, PreparedRoundsMatchPreparation) {
  for (const auto& r : Session(config_for(ProtocolId::p2, 3000)).run()) {
    if (r.bases[1] != r.bases[0]) continue;
    EXPECT_EQ(r.outcomes[1], r.outcomes[0]);
    if (r.bases[2] == r.bases[0]) EXPECT_EQ(r.outcomes[2], r.outcomes[0] % 2);
  }
}

TEST(Session, BasisProbabilitiesAreRespected) {
  auto c = config_for(ProtocolId::p1, 4000);
  c.basis_probabilities = {1.0, 1.0, 0.0};
  for (const auto& r : Session(c).run()) EXPECT_EQ(r.bases, (std::vector<BC>{BC::computational, BC::computational, BC::conjugate}));
}

TEST(Session, ConfigValidation) {
  auto c = config_for(ProtocolId::p1, 10);
  c.rounds = 0;
  EXPECT_THROW(Session{c}, std::invalid_argument);
  c = config_for(ProtocolId::p1, 10);
  c.check_fraction = 1.0;
  EXPECT_THROW(Session{c}, std::invalid_argument);
  c = config_for(ProtocolId::p1, 10);
  c.basis_probabilities = {0.5, 0.5};
  EXPECT_THROW(Session{c}, std::invalid_argument);
  c.basis_probabilities = {0.5, 1.5, 0.5};
  EXPECT_THROW(Session{c}, std::invalid_argument);
  c = config_for(ProtocolId::c_sskd, 10);
  c.charlie.key = 0.9;
  EXPECT_THROW(Session{c}, std::invalid_argument);
  c = config_for(ProtocolId::p2, 10);
  c.eve = EveStrategy::parse("intercept-resend:alice:computational");
  EXPECT_THROW(Session{c}, std::invalid_argument);
}

TEST(Sift, ClassificationExamples) {
  EXPECT_EQ(classify(record(ProtocolId::bd_ssskd, {BC::computational, BC::conjugate, BC::computational}, {0, 0, 0})),
            RoundClass::discard);
  EXPECT_EQ(classify(record(ProtocolId::bd_ssskd, {BC::conjugate, BC::conjugate, BC::computational}, {0, 0, 0})),
            RoundClass::secret_L1);
  EXPECT_EQ(classify(record(ProtocolId::bd_ssskd, {BC::computational, BC::computational, BC::conjugate}, {0, 0, 0})),
            RoundClass::key_L1);
  EXPECT_EQ(classify(record(ProtocolId::c_sskd, {BC::computational, BC::computational, BC::conjugate}, {0, 0, 0},
                            CharlieAction::key)),
            RoundClass::discard);
  EXPECT_EQ(classify(record(ProtocolId::c_sskd, {BC::conjugate, BC::computational, BC::conjugate}, {0, 0, 0},
                            CharlieAction::key)),
            RoundClass::key_all);
  EXPECT_EQ(classify(record(ProtocolId::c_sskd, {BC::conjugate, BC::computational, BC::conjugate}, {0, 3, 0},
                            CharlieAction::secret)),
            RoundClass::secret);
  EXPECT_EQ(classify(record(ProtocolId::p1, {BC::computational, BC::computational, BC::computational}, {0, 0, 0})),
            RoundClass::key_all);
  EXPECT_EQ(classify(record(ProtocolId::p1, {BC::conjugate, BC::conjugate, BC::conjugate}, {0, 0, 0})),
            RoundClass::check);
  EXPECT_EQ(classify(record(ProtocolId::p4, {BC::conjugate, BC::conjugate, BC::computational}, {0, 0, 0})),
            RoundClass::key_L1);
}

TEST(Sift, CheckFractionIsPerClass) {
  const auto c = config_for(ProtocolId::bd_ssskd, 8000);
  const auto sifted = sift(Session(c).run(), c.protocol, 0.25, c.seed);
  std::map<std::optional<BdMode>, std::pair<int, int>> per_mode;  // check, total among matched-basis rounds
  for (const auto& r : sifted) {
    const auto m = bd_mode_of(r.bases);
    if (!m) {
      EXPECT_EQ(r.cls, RoundClass::discard);
      continue;
    }
    per_mode[m].first += r.cls == RoundClass::check;
    ++per_mode[m].second;
  }
  ASSERT_EQ(per_mode.size(), 4u);
  for (const auto& [m, counts] : per_mode) EXPECT_NEAR(static_cast<double>(counts.first) / counts.second, 0.25, 0.002);
}

TEST(Sift, Errors) {
  EXPECT_THROW(sift({}, ProtocolId::p1, 0.2, 1), std::invalid_argument);
  EXPECT_THROW(sift({record(ProtocolId::p3, {BC::computational, BC::computational, BC::computational}, {0, 0, 0})},
                    ProtocolId::p1, 0.2, 1),
               std::invalid_argument);
}

}  // namespace
}  // namespace layerq
