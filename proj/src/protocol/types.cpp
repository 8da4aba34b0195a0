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

#include "layerq/protocol/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace layerq {

std::string_view to_string(ProtocolId id) {
  switch (id) {
    case ProtocolId::p1: return "p1";
    case ProtocolId::p2: return "p2";
    case ProtocolId::p3: return "p3";
    case ProtocolId::p4: return "p4";
    case ProtocolId::c_sskd: return "c-sskd";
    case ProtocolId::bd_ssskd: return "bd-ssskd";
  }
  return "?";
}

std::optional<ProtocolId> parse_protocol(std::string_view name) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return c == '_' ? '-' : std::tolower(c); });
  for (auto id : all_protocols())
    if (to_string(id) == n) return id;
  return std::nullopt;
}

const std::vector<ProtocolId>& all_protocols() {
  static const std::vector<ProtocolId> ids{ProtocolId::p1,     ProtocolId::p2,      ProtocolId::p3,
                                           ProtocolId::p4,     ProtocolId::c_sskd, ProtocolId::bd_ssskd};
  return ids;
}

const std::vector<std::string>& party_names(ProtocolId id) {
  static const std::vector<std::string> layered{"alice", "bob1", "bob2"};
  static const std::vector<std::string> controlled{"alice", "charlie", "bob"};
  return id == ProtocolId::c_sskd ? controlled : layered;
}

const std::vector<int>& party_dims(ProtocolId id) {
  static const std::vector<int> layered{4, 4, 2};
  static const std::vector<int> controlled{4, 4, 4};
  return id == ProtocolId::c_sskd ? controlled : layered;
}

void SessionConfig::validate() const {
  if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
  if (!basis_probabilities.empty() && basis_probabilities.size() != party_names(protocol).size())
    throw std::invalid_argument("expected " + std::to_string(party_names(protocol).size()) +
                                " basis probabilities, got " + std::to_string(basis_probabilities.size()));
  for (double p : basis_probabilities)
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("basis probability outside [0, 1]");
  if (!(check_fraction > 0.0 && check_fraction < 1.0)) throw std::invalid_argument("check fraction must lie in (0, 1)");
  const double policy[] = {charlie.key, charlie.secret, charlie.conjugate_check, charlie.decoy};
  double sum = 0;
  for (double p : policy) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("charlie policy probability outside [0, 1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("charlie policy probabilities must sum to 1");
}

double SessionConfig::computational_probability(std::size_t party) const {
  return basis_probabilities.empty() ? 0.5 : basis_probabilities.at(party);
}

std::string_view to_string(CharlieAction a) {
  switch (a) {
    case CharlieAction::none: return "none";
    case CharlieAction::key: return "key";
    case CharlieAction::secret: return "secret";
    case CharlieAction::conjugate_check: return "conjugateCheck";
    case CharlieAction::decoy: return "decoy";
    case CharlieAction::herald_failed: return "heraldFailed";
  }
  return "?";
}

std::optional<CharlieAction> parse_charlie_action(std::string_view s) {
  for (auto a : {CharlieAction::none, CharlieAction::key, CharlieAction::secret, CharlieAction::conjugate_check,
                 CharlieAction::decoy, CharlieAction::herald_failed})
    if (to_string(a) == s) return a;
  return std::nullopt;
}

std::string_view to_string(RoundClass c) {
  switch (c) {
    case RoundClass::unsifted: return "unsifted";
    case RoundClass::key_L1: return "key_L1";
    case RoundClass::key_L2: return "key_L2";
    case RoundClass::key_all: return "key_all";
    case RoundClass::secret: return "secret";
    case RoundClass::secret_L1: return "secret_L1";
    case RoundClass::secret_L2: return "secret_L2";
    case RoundClass::check: return "check";
    case RoundClass::decoy: return "decoy";
    case RoundClass::discard: return "discard";
  }
  return "?";
}

std::optional<RoundClass> parse_round_class(std::string_view s) {
  for (auto c : {RoundClass::unsifted, RoundClass::key_L1, RoundClass::key_L2, RoundClass::key_all, RoundClass::secret,
                 RoundClass::secret_L1, RoundClass::secret_L2, RoundClass::check, RoundClass::decoy,
                 RoundClass::discard})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::optional<BasisChoice> parse_basis_choice(std::string_view s) {
  if (s == "comp" || s == "computational") return BasisChoice::computational;
  if (s == "conj" || s == "conjugate") return BasisChoice::conjugate;
  if (s == "none") return BasisChoice::none;
  return std::nullopt;
}

std::string_view to_string(BdMode m) {
  switch (m) {
    case BdMode::CC_C: return "CC-C";
    case BdMode::JJ_J: return "JJ-J";
    case BdMode::CC_J: return "CC-J";
    case BdMode::JJ_C: return "JJ-C";
  }
  return "?";
}

std::optional<BdMode> bd_mode_of(const std::vector<BasisChoice>& bases) {
  if (bases.size() != 3 || bases[0] != bases[1]) return std::nullopt;
  const bool ab_comp = bases[0] == BasisChoice::computational;
  const bool b2_comp = bases[2] == BasisChoice::computational;
  if (ab_comp) return b2_comp ? BdMode::CC_C : BdMode::CC_J;
  return b2_comp ? BdMode::JJ_C : BdMode::JJ_J;
}

}  // namespace layerq
