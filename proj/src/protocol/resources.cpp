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

#include "layerq/protocol/resources.hpp"

#include <stdexcept>

#include "layerq/qudit/library.hpp"
#include "layerq/qudit/measure.hpp"

namespace layerq {

PreparationSampler::PreparationSampler(std::vector<Preparation> computational, std::vector<Preparation> conjugate)
    : computational_(std::move(computational)), conjugate_(std::move(conjugate)) {
  if (computational_.empty() || conjugate_.empty()) throw std::invalid_argument("empty preparation set");
}

const Preparation& PreparationSampler::draw(Rng& rng, double computational_probability) const {
  const auto& chosen = bernoulli(rng, computational_probability) ? computational_ : conjugate_;
  return chosen[uniform_index(rng, chosen.size())];
}

const std::vector<Preparation>& PreparationSampler::set(BasisChoice b) const {
  if (b == BasisChoice::none) throw std::invalid_argument("no preparation set for basis 'none'");
  return b == BasisChoice::computational ? computational_ : conjugate_;
}

PureState layered_qubit_resource() {
  const auto bell = states::bell().with_labels({"A", "B1"});
  const auto ghz = states::ghz3().with_labels({"A", "B1", "B2"});
  return permute_subsystems(tensor_product(bell, ghz), {0, 2, 1, 3, 4});
}

PreparationSampler ququart_preparations() {
  std::vector<Preparation> comp, conj;
  for (auto choice : {BasisChoice::computational, BasisChoice::conjugate}) {
    const BasisAssignment bases{basis_for(choice, 4), basis_for(choice, 2)};
    for (int j = 0; j < 4; ++j) {
      auto state = product_basis_state(bases, {j, j & 1}, {"B1", "B2"});
      (choice == BasisChoice::computational ? comp : conj).push_back({choice, j, std::move(state)});
    }
  }
  return PreparationSampler(std::move(comp), std::move(conj));
}

PreparationSampler qubit_preparations() {
  std::vector<Preparation> comp, conj;
  for (auto choice : {BasisChoice::computational, BasisChoice::conjugate}) {
    const auto q = basis_for(choice, 2);
    for (int symbol = 0; symbol < 4; ++symbol) {
      const int x = symbol >> 1, y = symbol & 1;
      auto state = product_basis_state<double>({q, q, q}, {x, y, y}, {"B1", "B1", "B2"});
      (choice == BasisChoice::computational ? comp : conj).push_back({choice, symbol, std::move(state)});
    }
  }
  return PreparationSampler(std::move(comp), std::move(conj));
}

Resource build_resource(ProtocolId id) {
  switch (id) {
    case ProtocolId::p1: return states::layered_reducible();
    case ProtocolId::p2: return ququart_preparations();
    case ProtocolId::p3: return layered_qubit_resource();
    case ProtocolId::p4: return qubit_preparations();
    case ProtocolId::c_sskd: return states::controlled_resource();
    case ProtocolId::bd_ssskd: return states::basis_dependent_resource();
  }
  throw std::invalid_argument("unknown protocol");
}

std::string retained_label(ProtocolId id) {
  switch (id) {
    case ProtocolId::p2:
    case ProtocolId::p4: return "";
    case ProtocolId::c_sskd: return "C";
    default: return "A";
  }
}

}  // namespace layerq
