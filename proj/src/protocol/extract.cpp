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

#include "layerq/protocol/extract.hpp"

#include <stdexcept>
#include <string>

namespace layerq {

std::pair<int, int> binary_decompose(int symbol) {
  if (symbol < 0 || symbol > 3) throw std::out_of_range("symbol " + std::to_string(symbol) + " outside 0..3");
  return {symbol >> 1, symbol & 1};
}

int extract_secret_mod4(int a, int b) {
  if (a < 0 || a > 3 || b < 0 || b > 3) throw std::out_of_range("mod-4 share outside 0..3");
  return (a + b) % 4;
}

namespace {

KeyMaterial make_key(std::string layer, RoundClass source, int alphabet, std::vector<std::string> parties) {
  KeyMaterial k;
  k.layer = std::move(layer);
  k.source = source;
  k.alphabet = alphabet;
  k.symbols.resize(parties.size());
  k.parties = std::move(parties);
  return k;
}

void push(KeyMaterial& k, std::uint64_t round, std::initializer_list<int> symbols) {
  k.rounds.push_back(round);
  std::size_t i = 0;
  for (int s : symbols) k.symbols[i++].push_back(s);
}

SecretMaterial make_secret(std::string layer, std::string population, int alphabet, std::vector<std::string> parties) {
  SecretMaterial s;
  s.layer = std::move(layer);
  s.population = std::move(population);
  s.alphabet = alphabet;
  s.shares.resize(parties.size());
  s.parties = std::move(parties);
  return s;
}

void push(SecretMaterial& s, std::uint64_t round, int secret, std::initializer_list<int> shares) {
  s.rounds.push_back(round);
  s.secrets.push_back(secret);
  std::size_t i = 0;
  for (int v : shares) s.shares[i++].push_back(v);
}

}  // namespace

std::vector<KeyMaterial> extract_layer_keys(const std::vector<RoundRecord>& records, ProtocolId protocol) {
  if (protocol == ProtocolId::c_sskd) {
    auto k = make_key("all", RoundClass::key_all, 3, {"alice", "charlie", "bob"});
    for (const auto& r : records)
      if (r.cls == RoundClass::key_all) push(k, r.round, {r.outcomes[0], r.outcomes[1], r.outcomes[2]});
    return {k};
  }

  auto l1 = make_key("L1", RoundClass::key_all, 2, {"alice", "bob1"});
  auto l2 = make_key("L2", RoundClass::key_all, 2, {"alice", "bob1", "bob2"});
  auto l1_only = make_key("L1", RoundClass::key_L1, 2, {"alice", "bob1"});
  const bool prepared = protocol == ProtocolId::p2 || protocol == ProtocolId::p4;
  for (const auto& r : records) {
    if (r.protocol != protocol) throw std::invalid_argument("record protocol mismatch");
    const auto [a1, a0] = binary_decompose(r.outcomes[0]);
    const auto [b1, b0] = binary_decompose(r.outcomes[1]);
    if (r.cls == RoundClass::key_all) {
      push(l1, r.round, {a1, b1});
      push(l2, r.round, {a0, b0, r.outcomes[2]});
    } else if (r.cls == RoundClass::key_L1 && prepared) {
      push(l1_only, r.round, {a1, b1});
    }
  }
  std::vector<KeyMaterial> out{l1, l2};
  if (prepared) out.push_back(l1_only);
  return out;
}

std::vector<RoundRecord> records_in_mode(const std::vector<RoundRecord>& records, BdMode mode) {
  std::vector<RoundRecord> out;
  for (const auto& r : records)
    if (r.protocol == ProtocolId::bd_ssskd && r.cls != RoundClass::check && r.cls != RoundClass::discard &&
        r.cls != RoundClass::unsifted && bd_mode_of(r.bases) == mode)
      out.push_back(r);
  return out;
}

Extraction extract_bd(const std::vector<RoundRecord>& records, BdMode mode) {
  Extraction out;
  const std::string tag(to_string(mode));
  switch (mode) {
    case BdMode::CC_C:
      out.keys = {make_key("L1", RoundClass::key_all, 2, {"alice", "bob1"}),
                  make_key("L2", RoundClass::key_all, 2, {"alice", "bob1", "bob2"})};
      break;
    case BdMode::JJ_J:
      out.secrets = {make_secret("L1", tag, 2, {"alice", "bob1"}), make_secret("L2", tag, 2, {"alice", "bob1", "bob2"})};
      break;
    case BdMode::CC_J:
      out.keys = {make_key("L1", RoundClass::key_L1, 2, {"alice", "bob1"})};
      out.secrets = {make_secret("L2", tag, 2, {"alice", "bob1"})};
      break;
    case BdMode::JJ_C:
      out.secrets = {make_secret("L1", tag, 2, {"alice", "bob1"}), make_secret("L2", tag, 2, {"alice", "bob1"})};
      break;
  }

  for (const auto& r : records) {
    if (bd_mode_of(r.bases) != mode)
      throw std::invalid_argument("round " + std::to_string(r.round) + " bases do not match mode " + tag);
    const auto [a1, a0] = binary_decompose(r.outcomes[0]);
    const auto [b1, b0] = binary_decompose(r.outcomes[1]);
    const int b2 = r.outcomes[2];
    switch (mode) {
      case BdMode::CC_C:
        push(out.keys[0], r.round, {a1, b1});
        push(out.keys[1], r.round, {a0, b0, b2});
        break;
      case BdMode::JJ_J:
        push(out.secrets[0], r.round, a1 ^ b1, {a1, b1});
        push(out.secrets[1], r.round, a0 ^ b0 ^ b2, {a0, b0, b2});
        break;
      case BdMode::CC_J:
        push(out.keys[0], r.round, {a1, b1});
        push(out.secrets[0], r.round, a0 ^ b0, {a0, b0});
        out.secrets[0].claimed_equal.push_back(b2);
        break;
      case BdMode::JJ_C:
        push(out.secrets[0], r.round, a0 ^ b0, {a0, b0});
        push(out.secrets[1], r.round, a1 ^ b1, {a1, b1});
        out.secrets[1].claimed_equal.push_back(b2);
        break;
    }
  }
  return out;
}

std::vector<SecretMaterial> extract_controlled_secrets(const std::vector<RoundRecord>& records) {
  auto comp = make_secret("all", "comp", 4, {"alice", "bob"});
  auto conj = make_secret("all", "conj", 4, {"alice", "bob"});
  for (const auto& r : records) {
    if (r.protocol != ProtocolId::c_sskd || r.cls != RoundClass::secret) continue;
    const int a = r.outcomes[0], b = r.outcomes[2];
    push(r.bases[0] == BasisChoice::computational ? comp : conj, r.round, extract_secret_mod4(a, b), {a, b});
  }
  return {comp, conj};
}

Extraction extract_all(const std::vector<RoundRecord>& sifted, ProtocolId protocol) {
  Extraction out;
  if (protocol == ProtocolId::bd_ssskd) {
    for (auto mode : {BdMode::CC_C, BdMode::JJ_J, BdMode::CC_J, BdMode::JJ_C}) {
      auto ex = extract_bd(records_in_mode(sifted, mode), mode);
      for (auto& k : ex.keys) out.keys.push_back(std::move(k));
      for (auto& s : ex.secrets) out.secrets.push_back(std::move(s));
    }
    return out;
  }
  out.keys = extract_layer_keys(sifted, protocol);
  if (protocol == ProtocolId::c_sskd) out.secrets = extract_controlled_secrets(sifted);
  return out;
}

}  // namespace layerq
