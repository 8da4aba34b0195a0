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
#include <vector>

#include "layerq/protocol/types.hpp"

namespace layerq {

/// Fraction of positions at which the participants' strings are not all
/// equal. 0 for empty material. Throws std::invalid_argument on unequal
/// string lengths.
double qber(const KeyMaterial& key);

struct RateEntry {
  std::string kind;        // "key" or "secret"
  std::string layer;       // L1, L2, all
  std::string cls;         // round class the symbols come from
  std::string population;  // secret sub-population, empty for keys
  int alphabet = 2;
  std::size_t symbols = 0;
  std::size_t class_rounds = 0;  // non-check rounds of that class (and secret population)
  double bits = 0;
  double bits_per_round = 0;        // over all rounds of the session
  double bits_per_class_round = 0;  // over class_rounds
  std::optional<double> qber;       // keys only
};

struct RateReport {
  std::uint64_t total_rounds = 0;
  std::vector<RateEntry> entries;
};

/// Sifted symbols x log2(alphabet), per layer and per class. Check rounds
/// are not counted. An empty record set gives an empty report.
RateReport key_rate(const std::vector<RoundRecord>& sifted, ProtocolId protocol);

}  // namespace layerq
