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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "layerq/protocol/types.hpp"
#include "layerq/qudit/state.hpp"

namespace layerq {

enum class TableId { T3, T4, T5 };

std::string_view to_string(TableId id);
/// Accepts "3", "T3", "t3" and so on.
std::optional<TableId> parse_table_id(std::string_view s);

using TupleFn = std::function<int(const IndexTuple&)>;

/// A claimed relation over outcome tuples (a, b1, b2).
struct Relation {
  enum class Kind { equality, independence };
  std::string name;
  Kind kind = Kind::equality;
  TupleFn lhs;
  TupleFn rhs;
};

struct TableSpec {
  TableId id = TableId::T3;
  std::string caption;
  std::vector<BasisChoice> bases;  // Alice, Bob1, Bob2
  std::vector<IndexTuple> claimed_support;
  std::vector<Relation> relations;
  /// Oracle-side relations that are evaluated and reported but are not
  /// part of the table's claim.
  std::vector<Relation> probes;
};

/// The published rows and relations of a table.
TableSpec table_spec(TableId id);

struct RelationResult {
  std::string name;
  std::string kind;  // "equality" or "independence"
  bool holds = false;
  std::vector<IndexTuple> counterexamples;
};

struct VerificationReport {
  TableId table = TableId::T3;
  std::string caption;
  std::vector<BasisChoice> bases;
  bool support_match = false;
  bool relation_match = false;
  std::vector<IndexTuple> oracle_support;
  std::vector<IndexTuple> claimed_support;
  /// Oracle probability of every tuple in the union of both supports.
  std::vector<std::pair<IndexTuple, double>> distribution;
  std::vector<RelationResult> relations;
  std::vector<RelationResult> probes;
  std::vector<std::string> findings;

  bool consistent() const { return support_match && relation_match; }
};

/// Checks a table against the oracle of `state` (the basis-dependent
/// resource by default). Pure and deterministic.
VerificationReport verify_table(const TableSpec& spec);
VerificationReport verify_table(const TableSpec& spec, const PureState& state);

std::string report_to_json(const VerificationReport& r, int indent = 2);
/// Inverse of report_to_json. Throws std::invalid_argument on malformed input.
VerificationReport report_from_json(const std::string& text);

}  // namespace layerq
