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

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "layerq/adversary/eve.hpp"
#include "layerq/protocol/resources.hpp"
#include "layerq/protocol/types.hpp"
#include "layerq/qudit/random.hpp"

namespace layerq {

/// Round-by-round simulation of one protocol session.
///
/// Rounds are grouped into fixed blocks of kRoundBlock; each block draws
/// from its own generator seeded from (seed, block index), and workers
/// take whole blocks. A record stream therefore depends only on the
/// config, never on the worker count.
inline constexpr std::uint64_t kRoundBlock = 1024;

class Session {
 public:
  explicit Session(SessionConfig config);
  ~Session();
  Session(Session&&) noexcept;
  Session& operator=(Session&&) noexcept;

  const SessionConfig& config() const;

  /// Runs one round with an explicit generator. `truth`, when given,
  /// receives Eve's hidden measurement log.
  RoundRecord run_round(std::uint64_t round_id, Rng& rng, EveLog* truth = nullptr) const;
  /// All rounds 0..rounds-1, unsifted, in round order. `truth`, when
  /// given, receives Eve's log for every round (indexed by round).
  std::vector<RoundRecord> run(unsigned workers = 1, std::vector<EveLog>* truth = nullptr) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Classifies records from the announced bases and Charlie's round class,
/// then diverts a `check_fraction` share of every key/secret class to
/// `check` (per class, chosen by a seeded hash of the round id).
///
/// P1/P3: all computational -> key_all, all conjugate -> check.
/// P2/P4: all bases equal -> key_all, Alice = Bob1 only -> key_L1.
/// c-SSKD: conjugateCheck -> check; decoy -> decoy; secret with equal
///   Alice/Bob bases -> secret; key with both conjugate -> key_all.
/// bd-SSSKD: Alice = Bob1 bases required; CC-C -> key_all, JJ-J -> secret,
///   CC-J -> key_L1, JJ-C -> secret_L1.
/// Everything else is discarded. Throws std::invalid_argument on an empty
/// record set.
std::vector<RoundRecord> sift(std::vector<RoundRecord> records, ProtocolId protocol, double check_fraction,
                              std::uint64_t seed);

/// Class a record gets before check sampling.
RoundClass classify(const RoundRecord& r);

}  // namespace layerq
