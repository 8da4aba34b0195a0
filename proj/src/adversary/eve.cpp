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

#include "layerq/adversary/eve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace layerq {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

EveStrategy EveStrategy::parse(std::string_view spec) {
  if (spec.empty() || spec == "none") return {};
  const auto parts = split(spec, ':');
  if (parts.size() != 3 || parts[0] != "intercept-resend")
    throw std::invalid_argument("malformed eve spec '" + std::string(spec) +
                                "', expected none or intercept-resend:<targets>:<basis>");
  EveStrategy s;
  s.kind = EveKind::intercept_resend;
  for (auto& t : split(parts[1], ',')) {
    if (t.empty()) throw std::invalid_argument("malformed eve spec '" + std::string(spec) + "': empty target");
    party_label(t);  // validates the name
    if (std::find(s.targets.begin(), s.targets.end(), t) == s.targets.end()) s.targets.push_back(t);
  }
  if (parts[2] == "computational" || parts[2] == "comp")
    s.basis = EveBasisPolicy::computational;
  else if (parts[2] == "conjugate" || parts[2] == "conj")
    s.basis = EveBasisPolicy::conjugate;
  else if (parts[2] == "random" || parts[2] == "randomPerRound")
    s.basis = EveBasisPolicy::random_per_round;
  else
    throw std::invalid_argument("malformed eve spec '" + std::string(spec) + "': unknown basis '" + parts[2] + "'");
  return s;
}

std::string EveStrategy::to_string() const {
  if (kind == EveKind::none) return "none";
  std::ostringstream out;
  out << "intercept-resend:";
  for (std::size_t i = 0; i < targets.size(); ++i) out << (i ? "," : "") << targets[i];
  out << ':';
  switch (basis) {
    case EveBasisPolicy::computational: out << "computational"; break;
    case EveBasisPolicy::conjugate: out << "conjugate"; break;
    case EveBasisPolicy::random_per_round: out << "random"; break;
  }
  return out.str();
}

std::string party_label(std::string_view party) {
  if (party == "alice") return "A";
  if (party == "bob") return "B";
  if (party == "bob1") return "B1";
  if (party == "bob2") return "B2";
  if (party == "charlie") return "C";
  throw std::invalid_argument("unknown party '" + std::string(party) + "'");
}

std::vector<int> resolve_targets(const EveStrategy& strategy, const Labels& labels, std::string_view retained_label) {
  std::vector<int> subsystems;
  if (!strategy.active()) return subsystems;
  for (const auto& party : strategy.targets) {
    const auto label = party_label(party);
    if (label == retained_label)
      throw std::invalid_argument("invalid target '" + party + "': its subsystem never leaves the preparer");
    bool found = false;
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == label) {
        subsystems.push_back(static_cast<int>(k));
        found = true;
      }
    if (!found) throw std::invalid_argument("invalid target '" + party + "': no such party in this protocol");
  }
  std::sort(subsystems.begin(), subsystems.end());
  return subsystems;
}

std::vector<DecoyPulse> decoy_round(Rng& rng, int dim, const std::vector<std::string>& targets) {
  std::vector<DecoyPulse> pulses;
  for (const auto& t : targets) {
    DecoyPulse p;
    p.basis = bernoulli(rng, 0.5) ? BasisChoice::computational : BasisChoice::conjugate;
    p.symbol = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(dim)));
    p.target = t;
    pulses.push_back(std::move(p));
  }
  return pulses;
}

PureState decoy_state(const DecoyPulse& pulse, int dim) {
  if (pulse.symbol < 0 || pulse.symbol >= dim) throw std::out_of_range("decoy symbol out of range");
  return product_basis_state<double>({basis_for(pulse.basis, dim)}, {pulse.symbol}, {party_label(pulse.target)});
}

}  // namespace layerq
