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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "layerq/protocol/types.hpp"
#include "layerq/qudit/state.hpp"

namespace layerq {

/// Exact no-Eve outcome distribution of one check combination.
struct OracleTable {
  Dims dims;
  std::vector<double> probabilities;  // flat, first coordinate most significant
};

/// Keyed by combination name, e.g. "conj,conj,comp", "key:conj,comp,conj",
/// "decoy:alice:comp".
using OracleBook = std::map<std::string, OracleTable>;

/// Every combination a protocol's check pool can produce.
///
/// Layered protocols and bd-SSSKD: all eight basis triples of the resource
/// (P2/P4 mix over Alice's uniformly drawn preparation symbol). c-SSKD:
/// the triple conditioned on Charlie's announced class, plus decoys, whose
/// (symbol, outcome) pairs must lie on the diagonal.
OracleBook build_oracle_book(ProtocolId protocol);

struct CheckSample {
  std::string combination;
  std::size_t flat = 0;
};

/// Check-class rounds, plus basis-matched decoy pulses.
std::vector<CheckSample> collect_check_samples(const std::vector<RoundRecord>& records);

struct CheckPolicy {
  double threshold = 0.05;
  /// Below this a combination is inconclusive.
  std::size_t min_samples = 200;
  /// The full-table distance is only evaluated once a combination has this
  /// many samples per supported outcome; below it sampling noise alone
  /// exceeds the threshold.
  std::size_t samples_per_outcome = 256;
};

struct CombinationStat {
  std::string combination;
  std::size_t samples = 0;
  std::size_t oracle_support = 0;
  /// Empirical mass on outcomes the oracle forbids.
  std::optional<double> support_violation;
  /// Full total-variation distance to the oracle.
  std::optional<double> tv;
  bool exceeds = false;
};

enum class Decision { accept, abort, inconclusive };

std::string_view to_string(Decision d);

struct EavesdropVerdict {
  double threshold = 0.05;
  std::size_t min_samples = 200;
  std::vector<CombinationStat> combinations;
  Decision decision = Decision::inconclusive;
};

/// Abort if any evaluated statistic exceeds the threshold; otherwise
/// inconclusive if some combination has fewer than min_samples samples;
/// otherwise accept. Throws std::invalid_argument on an empty sample set or
/// a combination missing from the book.
EavesdropVerdict empirical_check(const std::vector<CheckSample>& samples, const OracleBook& book,
                                 const CheckPolicy& policy = {});

}  // namespace layerq
