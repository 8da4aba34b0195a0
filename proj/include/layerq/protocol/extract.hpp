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

#include <utility>
#include <vector>

#include "layerq/protocol/types.hpp"

namespace layerq {

/// symbol = 2 * hi + lo. Throws std::out_of_range outside 0..3.
std::pair<int, int> binary_decompose(int symbol);

/// (a + b) mod 4. Throws std::out_of_range outside 0..3.
int extract_secret_mod4(int a, int b);

/// Layer keys from key-classified rounds.
///
/// Four-level outcomes split into bits: the two's place goes to L1 (Alice,
/// Bob1), the unit's place to L2 together with Bob2's raw bit. P2/P4
/// key_L1 rounds feed L1 only. c-SSKD key rounds share Charlie's
/// projector index among all three parties (layer "all", alphabet 3).
/// Non-key records are skipped.
std::vector<KeyMaterial> extract_layer_keys(const std::vector<RoundRecord>& records, ProtocolId protocol);

struct Extraction {
  std::vector<KeyMaterial> keys;
  std::vector<SecretMaterial> secrets;
};

/// Keys and secrets for one basis-dependent mode.
///
///   CC-C: L1 key a1 = b1_1, L2 key a0 = b1_0 = b2.
///   JJ-J: s1 = a1 ^ b1_1, s2 = a0 ^ b1_0 ^ b2.
///   CC-J: L1 key bit a1; L2 secret a0 ^ b1_0, claimed equal to b2.
///   JJ-C: L1 secret a0 ^ b1_0; L2 secret a1 ^ b1_1, claimed equal to b2.
///
/// Throws std::invalid_argument when a record's bases do not match `mode`.
Extraction extract_bd(const std::vector<RoundRecord>& records, BdMode mode);

/// Sifted (non-check) bd-SSSKD records of one mode.
std::vector<RoundRecord> records_in_mode(const std::vector<RoundRecord>& records, BdMode mode);

/// c-SSKD secrets s = a +_4 b, split into the computational and conjugate
/// sub-populations (in that order).
std::vector<SecretMaterial> extract_controlled_secrets(const std::vector<RoundRecord>& records);

/// Everything a sifted session yields: layer keys, c-SSKD secrets, or all
/// four bd-SSSKD modes.
Extraction extract_all(const std::vector<RoundRecord>& sifted, ProtocolId protocol);

}  // namespace layerq
