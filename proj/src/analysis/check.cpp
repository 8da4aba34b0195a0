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

#include "layerq/analysis/check.hpp"

#include <cmath>
#include <stdexcept>

#include "layerq/protocol/resources.hpp"
#include "layerq/qudit/measure.hpp"

namespace layerq {

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::accept: return "accept";
    case Decision::abort: return "abort";
    case Decision::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::string join_bases(const std::vector<BasisChoice>& bases) {
  std::string s;
  for (std::size_t i = 0; i < bases.size(); ++i) s += (i ? "," : "") + std::string(to_string(bases[i]));
  return s;
}

std::vector<BasisChoice> triple(unsigned mask) {
  std::vector<BasisChoice> out;
  for (int k = 0; k < 3; ++k)
    out.push_back((mask >> k) & 1 ? BasisChoice::conjugate : BasisChoice::computational);
  return out;
}

/// Basis per subsystem, from the basis of the party owning it.
BasisAssignment assignment_for(const PureState& s, const std::vector<std::string>& parties,
                               const std::vector<BasisChoice>& party_bases) {
  BasisAssignment out;
  for (std::size_t k = 0; k < s.num_subsystems(); ++k) {
    std::size_t p = 0;
    while (p < parties.size() && party_label(parties[p]) != s.labels()[k]) ++p;
    if (p == parties.size()) throw std::logic_error("subsystem without a party: " + s.labels()[k]);
    out.push_back(basis_for(party_bases[p], s.dims()[k]));
  }
  return out;
}

Dims outcome_dims(ProtocolId id) { return Dims(party_dims(id).begin(), party_dims(id).end()); }

}  // namespace

OracleBook build_oracle_book(ProtocolId protocol) {
  OracleBook book;
  const auto& parties = party_names(protocol);
  const Dims dims = outcome_dims(protocol);
  auto resource = build_resource(protocol);

  if (const auto* sampler = std::get_if<PreparationSampler>(&resource)) {
    for (unsigned mask = 0; mask < 8; ++mask) {
      const auto bases = triple(mask);
      OracleTable t{dims, std::vector<double>(total_dimension(dims), 0.0)};
      const auto& set = sampler->set(bases[0]);
      const std::size_t block = total_dimension(dims) / 4;
      for (const auto& prep : set) {
        const auto table = joint_distribution(prep.state, assignment_for(prep.state, parties, bases));
        for (std::size_t f = 0; f < block; ++f)
          t.probabilities[prep.symbol * block + f] += table.probabilities[f] / set.size();
      }
      book[join_bases(bases)] = std::move(t);
    }
    return book;
  }

  const auto& state = std::get<PureState>(resource);
  if (protocol != ProtocolId::c_sskd) {
    for (unsigned mask = 0; mask < 8; ++mask) {
      const auto bases = triple(mask);
      book[join_bases(bases)] = {dims, joint_distribution(state, assignment_for(state, parties, bases)).probabilities};
    }
    return book;
  }

  // c-SSKD: (alice, charlie, bob), each a ququart
  for (unsigned mask = 0; mask < 8; ++mask) {
    const auto bases = triple(mask);
    const auto table = joint_distribution(state, assignment_for(state, parties, bases));
    if (bases[1] == BasisChoice::conjugate) {
      book["conjugateCheck:" + join_bases(bases)] = {dims, table.probabilities};
      continue;
    }
    for (const bool secret : {false, true}) {
      std::vector<double> p = table.probabilities;
      double kept = 0;
      for (std::size_t f = 0; f < p.size(); ++f) {
        const int c = static_cast<int>(f / 4 % 4);
        if ((c == 3) != secret) p[f] = 0;
        kept += p[f];
      }
      for (auto& x : p) x /= kept;
      book[std::string(secret ? "secret:" : "key:") + join_bases(bases)] = {dims, std::move(p)};
    }
  }
  for (const char* party : {"alice", "bob"})
    for (auto b : {BasisChoice::computational, BasisChoice::conjugate}) {
      OracleTable t{{4, 4}, std::vector<double>(16, 0.0)};
      for (int j = 0; j < 4; ++j) t.probabilities[j * 4 + j] = 0.25;
      book[std::string("decoy:") + party + ":" + std::string(to_string(b))] = std::move(t);
    }
  return book;
}

std::vector<CheckSample> collect_check_samples(const std::vector<RoundRecord>& records) {
  std::vector<CheckSample> out;
  for (const auto& r : records) {
    if (r.cls == RoundClass::check) {
      std::string name = join_bases(r.bases);
      if (r.protocol == ProtocolId::c_sskd) name = std::string(to_string(r.action)) + ":" + name;
      const auto& dims = party_dims(r.protocol);
      out.push_back({std::move(name), flat_index(Dims(dims.begin(), dims.end()), r.outcomes)});
    } else if (r.cls == RoundClass::decoy) {
      for (const auto& pulse : r.decoys) {
        const std::size_t party = pulse.target == "alice" ? 0 : 2;
        if (!compare_decoy(pulse, r.bases[party], r.outcomes[party]).usable) continue;
        out.push_back({"decoy:" + pulse.target + ":" + std::string(to_string(pulse.basis)),
                       static_cast<std::size_t>(pulse.symbol * 4 + r.outcomes[party])});
      }
    }
  }
  return out;
}

EavesdropVerdict empirical_check(const std::vector<CheckSample>& samples, const OracleBook& book,
                                 const CheckPolicy& policy) {
  if (samples.empty()) throw std::invalid_argument("empty check set");
  std::map<std::string, std::vector<double>> counts;
  for (const auto& s : samples) {
    const auto it = book.find(s.combination);
    if (it == book.end()) throw std::invalid_argument("no oracle for combination '" + s.combination + "'");
    auto& c = counts[s.combination];
    if (c.empty()) c.assign(it->second.probabilities.size(), 0.0);
    if (s.flat >= c.size()) throw std::out_of_range("check outcome outside the oracle table");
    c[s.flat] += 1;
  }

  EavesdropVerdict v;
  v.threshold = policy.threshold;
  v.min_samples = policy.min_samples;
  bool abort = false, thin = false;
  for (auto& [name, c] : counts) {
    const auto& oracle = book.at(name).probabilities;
    CombinationStat st;
    st.combination = name;
    double n = 0;
    for (double x : c) n += x;
    st.samples = static_cast<std::size_t>(n);
    for (double p : oracle) st.oracle_support += p > 1e-12;
    if (st.samples < policy.min_samples) {
      thin = true;
    } else {
      double outside = 0;
      for (std::size_t f = 0; f < c.size(); ++f)
        if (oracle[f] <= 1e-12) outside += c[f];
      st.support_violation = outside / n;
      st.exceeds = *st.support_violation > policy.threshold;
      if (st.samples >= policy.samples_per_outcome * st.oracle_support) {
        for (auto& x : c) x /= n;
        st.tv = total_variation(c, oracle);
        st.exceeds = st.exceeds || *st.tv > policy.threshold;
      }
    }
    abort = abort || st.exceeds;
    v.combinations.push_back(std::move(st));
  }
  v.decision = abort ? Decision::abort : thin ? Decision::inconclusive : Decision::accept;
  return v;
}

}  // namespace layerq
