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

#include "layerq/analysis/rates.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "layerq/protocol/extract.hpp"

namespace layerq {

double qber(const KeyMaterial& key) {
  const std::size_t n = key.length();
  for (const auto& row : key.symbols)
    if (row.size() != n) throw std::invalid_argument("key strings of layer " + key.layer + " differ in length");
  if (n == 0 || key.symbols.empty()) return 0.0;
  std::size_t errors = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& row : key.symbols)
      if (row[i] != key.symbols.front()[i]) {
        ++errors;
        break;
      }
  return static_cast<double>(errors) / static_cast<double>(n);
}

namespace {

RateEntry entry(std::string kind, std::string layer, RoundClass cls, std::string population, int alphabet,
                std::size_t symbols, const std::map<RoundClass, std::size_t>& class_rounds, std::uint64_t total) {
  RateEntry e;
  e.kind = std::move(kind);
  e.layer = std::move(layer);
  e.cls = std::string(to_string(cls));
  e.population = std::move(population);
  e.alphabet = alphabet;
  e.symbols = symbols;
  const auto it = class_rounds.find(cls);
  e.class_rounds = it == class_rounds.end() ? 0 : it->second;
  e.bits = static_cast<double>(symbols) * std::log2(static_cast<double>(alphabet));
  e.bits_per_round = total ? e.bits / static_cast<double>(total) : 0.0;
  e.bits_per_class_round = e.class_rounds ? e.bits / static_cast<double>(e.class_rounds) : 0.0;
  return e;
}

RateEntry key_entry(const KeyMaterial& k, const std::map<RoundClass, std::size_t>& class_rounds, std::uint64_t total) {
  auto e = entry("key", k.layer, k.source, "", k.alphabet, k.length(), class_rounds, total);
  e.qber = qber(k);
  return e;
}

RoundClass secret_class(const SecretMaterial& s) {
  if (s.population == "JJ-C") return RoundClass::secret_L1;
  if (s.population == "CC-J") return RoundClass::key_L1;
  return RoundClass::secret;
}

}  // namespace

RateReport key_rate(const std::vector<RoundRecord>& sifted, ProtocolId protocol) {
  RateReport report;
  report.total_rounds = sifted.size();
  if (sifted.empty()) return report;
  std::map<RoundClass, std::size_t> class_rounds;
  for (const auto& r : sifted) ++class_rounds[r.cls];
  const auto total = report.total_rounds;

  const auto ex = extract_all(sifted, protocol);
  for (const auto& k : ex.keys) report.entries.push_back(key_entry(k, class_rounds, total));
  for (const auto& s : ex.secrets) {
    // c-SSKD splits one class into basis populations; each is its own denominator
    auto rounds = class_rounds;
    rounds[secret_class(s)] = s.secrets.size();
    report.entries.push_back(
        entry("secret", s.layer, secret_class(s), s.population, s.alphabet, s.secrets.size(), rounds, total));
  }
  return report;
}

}  // namespace layerq
