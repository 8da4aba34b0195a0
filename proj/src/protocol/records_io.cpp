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

#include "layerq/protocol/records_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace layerq {

using json = nlohmann::ordered_json;

namespace {

template <class T, class Parse>
T parse_field(const json& j, const char* key, Parse parse) {
  const auto v = parse(j.at(key).get<std::string>());
  if (!v) throw std::invalid_argument(std::string("bad value for '") + key + "'");
  return *v;
}

}  // namespace

std::string record_to_json(const RoundRecord& r) {
  json j;
  j["round"] = r.round;
  j["protocol"] = std::string(to_string(r.protocol));
  j["bases"] = json::array();
  for (auto b : r.bases) j["bases"].push_back(std::string(to_string(b)));
  j["action"] = std::string(to_string(r.action));
  j["outcomes"] = r.outcomes;
  j["class"] = std::string(to_string(r.cls));
  if (!r.decoys.empty()) {
    j["decoys"] = json::array();
    for (const auto& d : r.decoys)
      j["decoys"].push_back({{"basis", std::string(to_string(d.basis))}, {"symbol", d.symbol}, {"target", d.target}});
  }
  return j.dump();
}

RoundRecord record_from_json(const std::string& line) {
  try {
    const auto j = json::parse(line);
    RoundRecord r;
    r.round = j.at("round").get<std::uint64_t>();
    r.protocol = parse_field<ProtocolId>(j, "protocol", parse_protocol);
    for (const auto& b : j.at("bases")) {
      const auto c = parse_basis_choice(b.get<std::string>());
      if (!c) throw std::invalid_argument("bad basis");
      r.bases.push_back(*c);
    }
    r.action = parse_field<CharlieAction>(j, "action", parse_charlie_action);
    r.outcomes = j.at("outcomes").get<std::vector<int>>();
    r.cls = parse_field<RoundClass>(j, "class", parse_round_class);
    if (j.contains("decoys")) {
      for (const auto& d : j.at("decoys")) {
        DecoyPulse p;
        p.basis = parse_field<BasisChoice>(d, "basis", parse_basis_choice);
        p.symbol = d.at("symbol").get<int>();
        p.target = d.at("target").get<std::string>();
        r.decoys.push_back(p);
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

void write_records(std::ostream& out, const std::vector<RoundRecord>& records) {
  for (const auto& r : records) out << record_to_json(r) << '\n';
}

std::vector<RoundRecord> read_records(std::istream& in) {
  std::vector<RoundRecord> out;
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(record_from_json(line));
  return out;
}

}  // namespace layerq
