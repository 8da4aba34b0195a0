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

#include <string>
#include <variant>
#include <vector>

#include "layerq/protocol/types.hpp"
#include "layerq/qudit/random.hpp"
#include "layerq/qudit/state.hpp"

namespace layerq {

/// A state Alice prepares and sends on (prepare-and-measure protocols).
/// `state` holds only the transmitted subsystems; Alice's own record is
/// `symbol` in `basis`.
struct Preparation {
  BasisChoice basis;
  int symbol;
  PureState state;
};

/// Draws from the declared preparation sets: first the set (computational
/// with the given probability), then a symbol uniformly within the set.
class PreparationSampler {
 public:
  PreparationSampler(std::vector<Preparation> computational, std::vector<Preparation> conjugate);

  const Preparation& draw(Rng& rng, double computational_probability = 0.5) const;
  const std::vector<Preparation>& set(BasisChoice b) const;
  const Preparation& get(BasisChoice b, int symbol) const { return set(b).at(static_cast<std::size_t>(symbol)); }

 private:
  std::vector<Preparation> computational_;
  std::vector<Preparation> conjugate_;
};

using Resource = std::variant<PureState, PreparationSampler>;

/// P1 -> layered reducible ququart state; P3 -> Bell (x) GHZ qubits, parties
/// contiguous; c-SSKD -> normalized controlled resource; bd-SSSKD -> the
/// basis-dependent resource; P2/P4 -> preparation samplers.
Resource build_resource(ProtocolId id);

/// Bell(A,B1) (x) GHZ(A,B1,B2) reordered to A A B1 B1 B2.
PureState layered_qubit_resource();

/// S1 = {|00>,|11>,|20>,|31>}, S2 = {|u_0 +>,|u_1 ->,|u_2 +>,|u_3 ->}, sent to Bob1 (d=4) and Bob2 (d=2).
PreparationSampler ququart_preparations();

/// Per layer: L1 {|x>} / {|+->} to Bob1, L2 {|yy>} / {|+-,+->} to Bob1 and Bob2.
/// Alice's symbol is 2x + y.
PreparationSampler qubit_preparations();

/// Label of the subsystem the preparer keeps ("" when nothing is kept).
std::string retained_label(ProtocolId id);

}  // namespace layerq
