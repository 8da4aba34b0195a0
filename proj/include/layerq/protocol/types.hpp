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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "layerq/adversary/eve.hpp"
#include "layerq/qudit/basis.hpp"

namespace layerq {

/// P1: entangled ququart LQKD; P2: separable ququart preparations;
/// P3: Bell + GHZ qubits; P4: separable qubit preparations;
/// c_sskd: controlled secret sharing and key distribution;
/// bd_ssskd: basis-dependent simultaneous secret sharing and key distribution.
enum class ProtocolId { p1, p2, p3, p4, c_sskd, bd_ssskd };

std::string_view to_string(ProtocolId id);
/// Accepts p1..p4, c-sskd, bd-ssskd (case-insensitive, '_' or '-').
std::optional<ProtocolId> parse_protocol(std::string_view name);
const std::vector<ProtocolId>& all_protocols();

/// Party names in record order. c-SSKD: alice, charlie, bob. Others: alice, bob1, bob2.
const std::vector<std::string>& party_names(ProtocolId id);
/// Outcome alphabet size of each party.
const std::vector<int>& party_dims(ProtocolId id);

/// Charlie's control policy for c-SSKD rounds.
struct CharliePolicy {
  double key = 0.4;              // pi_0 .. pi_2
  double secret = 0.4;           // pi_3
  double conjugate_check = 0.1;  // measurement in {u_j}
  double decoy = 0.1;

  bool operator==(const CharliePolicy&) const = default;
};

struct SessionConfig {
  ProtocolId protocol = ProtocolId::bd_ssskd;
  std::uint64_t rounds = 1;
  std::uint64_t seed = 0;
  /// Probability that each party measures (or prepares) in the
  /// computational basis. Empty means 1/2 for everyone.
  std::vector<double> basis_probabilities;
  CharliePolicy charlie;
  EveStrategy eve;
  double check_fraction = 0.2;

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
  double computational_probability(std::size_t party) const;

  bool operator==(const SessionConfig&) const = default;
};

enum class CharlieAction { none, key, secret, conjugate_check, decoy, herald_failed };

std::string_view to_string(CharlieAction a);
std::optional<CharlieAction> parse_charlie_action(std::string_view s);

enum class RoundClass { unsifted, key_L1, key_L2, key_all, secret, secret_L1, secret_L2, check, decoy, discard };

std::string_view to_string(RoundClass c);
std::optional<RoundClass> parse_round_class(std::string_view s);
std::optional<BasisChoice> parse_basis_choice(std::string_view s);

/// One protocol round as announced and recorded by the parties.
struct RoundRecord {
  std::uint64_t round = 0;
  ProtocolId protocol = ProtocolId::bd_ssskd;
  std::vector<BasisChoice> bases;  // per party
  CharlieAction action = CharlieAction::none;
  /// Per party; parties holding several subsystems report the mixed-radix
  /// composite (first subsystem most significant).
  std::vector<int> outcomes;
  RoundClass cls = RoundClass::unsifted;
  std::vector<DecoyPulse> decoys;

  bool is_decoy() const { return action == CharlieAction::decoy; }
  bool operator==(const RoundRecord&) const = default;
};

/// Key strings of one layer, one row per participant.
struct KeyMaterial {
  std::string layer;  // L1, L2 or all
  RoundClass source = RoundClass::key_all;
  int alphabet = 2;
  std::vector<std::string> parties;
  std::vector<std::vector<int>> symbols;  // [party][position]
  std::vector<std::uint64_t> rounds;

  std::size_t length() const { return rounds.size(); }
};

/// Per-round reconstructed secrets of one layer.
struct SecretMaterial {
  std::string layer;
  std::string population;  // e.g. JJ-J, CC-J, comp, conj
  int alphabet = 2;
  std::vector<std::uint64_t> rounds;
  std::vector<int> secrets;
  std::vector<std::string> parties;      // contributing parties
  std::vector<std::vector<int>> shares;  // [party][position]
  /// Outcome the secret is claimed to equal (Bob2's outcome), when the
  /// extraction rule carries such a claim. Recorded, not enforced.
  std::vector<int> claimed_equal;
};

/// The four basis-dependent task modes, named by (Alice Bob1 basis)-(Bob2 basis).
enum class BdMode { CC_C, JJ_J, CC_J, JJ_C };

std::string_view to_string(BdMode m);
std::optional<BdMode> bd_mode_of(const std::vector<BasisChoice>& bases);

}  // namespace layerq
