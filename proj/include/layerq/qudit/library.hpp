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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "layerq/qudit/basis.hpp"
#include "layerq/qudit/state.hpp"

namespace layerq {

/// Terms of sum_j |u_j>|j>|u_j> - 2|333> before normalization (64 entries
/// plus the correction term).
std::vector<Term> controlled_resource_terms();

namespace states {

/// 1/2 [(|00> + |22>)|0> + (|11> + |33>)|1>], dims (4, 4, 2). Reducible.
PureState layered_reducible();
/// 1/2 [(|00> + |22>)|0> + (|11> - |33>)|1>], dims (4, 4, 2).
PureState layered_irreducible();
/// sum_j |u_j>|j>|u_j> - 2|333>, normalized by 1/sqrt(7). Parties A, C, B.
PureState controlled_resource();
/// 1/2 (|000> + |111> + |220> - |331>), dims (4, 4, 2).
PureState basis_dependent_resource();
/// (|00> + |11>)/sqrt(2)
PureState bell();
/// (|000> + |111>)/sqrt(2)
PureState ghz3();

}  // namespace states

/// Names accepted by builtin_state().
const std::vector<std::string>& builtin_state_names();

/// Resolves eq1, eq3, eq6, eq8, bell, ghz3.
std::optional<PureState> builtin_state(std::string_view name);

/// Parses the state text format:
///
///     # comment
///     dims 4 4 2
///     labels A B1 B2        (optional)
///     0,0,0  0.5  0
///     1,1,1  0.5  0
///
/// One term per line: comma-separated index tuple (parentheses allowed),
/// real part, imaginary part. The result is normalized.
PureState parse_state_text(std::string_view text);

/// Writes a state in the format read by parse_state_text (nonzero terms only).
std::string format_state_text(const PureState& s);

/// Builtin name, or a path to a state text file.
PureState load_state(const std::string& id_or_path);

}  // namespace layerq
