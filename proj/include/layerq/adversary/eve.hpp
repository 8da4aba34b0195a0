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
#include <string_view>
#include <vector>

#include "layerq/qudit/basis.hpp"
#include "layerq/qudit/measure.hpp"
#include "layerq/qudit/random.hpp"
#include "layerq/qudit/state.hpp"

namespace layerq {

enum class EveKind { none, intercept_resend };
enum class EveBasisPolicy { computational, conjugate, random_per_round };

/// Measure-and-resend eavesdropper. Configured from strings of the form
/// `none` or `intercept-resend:<party>[,<party>...]:<computational|conjugate|random>`.
struct EveStrategy {
  EveKind kind = EveKind::none;
  std::vector<std::string> targets;  // party names: alice, bob, bob1, bob2, charlie
  EveBasisPolicy basis = EveBasisPolicy::computational;

  static EveStrategy parse(std::string_view spec);
  std::string to_string() const;
  bool active() const { return kind == EveKind::intercept_resend && !targets.empty(); }

  bool operator==(const EveStrategy&) const = default;
};

/// Subsystem label carried by states for a party name ("bob1" -> "B1").
std::string party_label(std::string_view party);

/// Subsystems of a state that Eve touches. Throws std::invalid_argument
/// when a target names a party absent from the state or one that holds
/// `retained_label` (the preparer's own subsystem never transits a channel).
std::vector<int> resolve_targets(const EveStrategy& strategy, const Labels& labels,
                                 std::string_view retained_label);

/// Hidden record of Eve's measurements. Test-only ground truth; never
/// written to protocol outputs.
struct EveObservation {
  int subsystem;
  BasisKind basis;
  int outcome;
};
using EveLog = std::vector<EveObservation>;

/// Eve's basis for one interception. Draws from rng only for random_per_round.
template <typename Real = double>
BasisSetT<Real> eve_basis(EveBasisPolicy policy, int d, Rng& rng) {
  switch (policy) {
    case EveBasisPolicy::computational: return basis<Real>(BasisKind::computational, d);
    case EveBasisPolicy::conjugate: return conjugate_basis<Real>(d);
    case EveBasisPolicy::random_per_round:
      return bernoulli(rng, 0.5) ? basis<Real>(BasisKind::computational, d) : conjugate_basis<Real>(d);
  }
  return basis<Real>(BasisKind::computational, d);
}

/// Eve measures each targeted subsystem in turn and forwards the collapsed state.
template <typename Real>
PureStateT<Real> apply_intercept_resend(const PureStateT<Real>& s, const std::vector<int>& subsystems,
                                        EveBasisPolicy policy, Rng& rng, EveLog* log = nullptr) {
  PureStateT<Real> current = s;
  for (int sub : subsystems) {
    if (sub < 0 || static_cast<std::size_t>(sub) >= current.num_subsystems())
      throw std::invalid_argument("invalid target subsystem " + std::to_string(sub));
    const int d = current.dims()[static_cast<std::size_t>(sub)];
    const auto b = eve_basis<Real>(policy, d, rng);
    const auto branch = apply_local<Real>(current.amplitudes(), current.dims(), static_cast<std::size_t>(sub),
                                          b.vectors.adjoint());
    // probabilities of each outcome on this subsystem
    Eigen::Index outer = 1, inner = 1;
    for (int j = 0; j < sub; ++j) outer *= current.dims()[static_cast<std::size_t>(j)];
    for (std::size_t j = static_cast<std::size_t>(sub) + 1; j < current.num_subsystems(); ++j) inner *= current.dims()[j];
    std::vector<Real> weights(static_cast<std::size_t>(d), Real(0));
    for (Eigen::Index o = 0; o < outer; ++o)
      for (int k = 0; k < d; ++k) weights[static_cast<std::size_t>(k)] += branch.segment((o * d + k) * inner, inner).squaredNorm();
    const int k = static_cast<int>(sample_weights<Real>(rng, weights));
    current = project_subsystem(current, static_cast<std::size_t>(sub), b, k).collapsed;
    if (log) log->push_back({sub, b.kind, k});
  }
  return current;
}

/// Exact outcome distribution after the measure-and-resend channel:
/// Eve's outcome branches (and basis choices, for random_per_round) are
/// enumerated and the per-branch distributions mixed by branch weight.
template <typename Real>
DistributionTableT<Real> channel_distribution(const PureStateT<Real>& s, const std::vector<int>& subsystems,
                                              EveBasisPolicy policy, const BasisAssignmentT<Real>& bases) {
  check_bases(s.dims(), bases);
  DistributionTableT<Real> mixed{bases, s.dims(), std::vector<Real>(static_cast<std::size_t>(s.size()), Real(0))};

  auto recurse = [&](auto&& self, const PureStateT<Real>& state, std::size_t depth, Real weight) -> void {
    if (depth == subsystems.size()) {
      const auto branch = joint_distribution(state, bases);
      for (std::size_t i = 0; i < mixed.probabilities.size(); ++i) mixed.probabilities[i] += weight * branch.probabilities[i];
      return;
    }
    const int sub = subsystems[depth];
    if (sub < 0 || static_cast<std::size_t>(sub) >= state.num_subsystems())
      throw std::invalid_argument("invalid target subsystem " + std::to_string(sub));
    const int d = state.dims()[static_cast<std::size_t>(sub)];
    std::vector<std::pair<BasisSetT<Real>, Real>> options;
    switch (policy) {
      case EveBasisPolicy::computational: options.emplace_back(basis<Real>(BasisKind::computational, d), Real(1)); break;
      case EveBasisPolicy::conjugate: options.emplace_back(conjugate_basis<Real>(d), Real(1)); break;
      case EveBasisPolicy::random_per_round:
        options.emplace_back(basis<Real>(BasisKind::computational, d), Real(0.5));
        options.emplace_back(conjugate_basis<Real>(d), Real(0.5));
        break;
    }
    for (const auto& [b, w] : options)
      for (int k = 0; k < d; ++k) {
        try {
          const auto proj = project_subsystem(state, static_cast<std::size_t>(sub), b, k);
          self(self, proj.collapsed, depth + 1, weight * w * proj.probability);
        } catch (const ZeroProbabilityBranch&) {
        }
      }
  };
  recurse(recurse, s, 0, Real(1));
  return mixed;
}

/// One prepare-and-compare decoy qudit sent to a party.
struct DecoyPulse {
  BasisChoice basis = BasisChoice::computational;
  int symbol = 0;
  std::string target;

  bool operator==(const DecoyPulse&) const = default;
};

/// The expected correlation of a decoy: a basis-matched report must equal
/// the prepared symbol; mismatched reports are dropped from checking.
struct DecoyExpectation {
  bool usable;  // measured in the preparation basis
  bool consistent;
};

inline DecoyExpectation compare_decoy(const DecoyPulse& pulse, BasisChoice measured, int outcome) {
  if (measured != pulse.basis) return {false, false};
  return {true, outcome == pulse.symbol};
}

/// Random preparation basis (computational or conjugate) and symbol for
/// each target.
std::vector<DecoyPulse> decoy_round(Rng& rng, int dim, const std::vector<std::string>& targets);

/// The single-qudit state carried by a decoy pulse.
PureState decoy_state(const DecoyPulse& pulse, int dim);

}  // namespace layerq
