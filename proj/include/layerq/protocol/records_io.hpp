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

#include <iosfwd>
#include <string>
#include <vector>

#include "layerq/protocol/types.hpp"

namespace layerq {

/// One JSON object per line:
///   {"round":0,"protocol":"bd-ssskd","bases":["comp","conj","comp"],
///    "action":"none","outcomes":[1,2,0],"class":"key_all"}
/// Decoy rounds add "decoys":[{"basis":"comp","symbol":2,"target":"alice"},...].
std::string record_to_json(const RoundRecord& r);
/// Throws std::invalid_argument on malformed input.
RoundRecord record_from_json(const std::string& line);

void write_records(std::ostream& out, const std::vector<RoundRecord>& records);
std::vector<RoundRecord> read_records(std::istream& in);

}  // namespace layerq
