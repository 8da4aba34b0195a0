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

#include "layerq/protocol/session.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <thread>

#include "layerq/qudit/measure.hpp"

namespace layerq {

namespace {

constexpr std::size_t kParties = 3;

/// Maps state subsystems onto parties and caches per-basis-choice data.
struct Layout {
  Dims dims;                      // subsystem dims
  std::vector<std::size_t> party;  // party index of each subsystem
  Dims outcome_dims;              // composite dims of the parties present, in order
  std::vector<std::size_t> present;  // party indices present in the state, in order
  std::vector<BasisAssignment> assignments;  // indexed by conjugate mask over the 3 parties

  Layout(const PureState& s, ProtocolId id) : dims(s.dims()) {
    const auto& names = party_names(id);
    for (const auto& label : s.labels()) {
      std::size_t p = kParties;
      for (std::size_t i = 0; i < names.size(); ++i)
        if (party_label(names[i]) == label) p = i;
      if (p == kParties) throw std::logic_error("state label '" + label + "' names no party");
      if (!party.empty() && p < party.back()) throw std::logic_error("party subsystems must be contiguous");
      if (party.empty() || p != party.back()) {
        present.push_back(p);
        outcome_dims.push_back(1);
      }
      party.push_back(p);
      outcome_dims.back() *= s.dims()[party.size() - 1];
    }
    for (unsigned mask = 0; mask < (1u << kParties); ++mask) {
      BasisAssignment a;
      for (std::size_t k = 0; k < dims.size(); ++k)
        a.push_back(basis_for(mask >> party[k] & 1u ? BasisChoice::conjugate : BasisChoice::computational, dims[k]));
      assignments.push_back(std::move(a));
    }
  }

  void write_outcomes(std::size_t flat, std::vector<int>& outcomes) const {
    const auto composite = unflatten(outcome_dims, flat);
    for (std::size_t i = 0; i < present.size(); ++i) outcomes[present[i]] = composite[i];
  }
};

/// Eve's measure-and-resend outcomes on one source state, enumerated once.
/// Each branch keeps the forwarded state's outcome distribution for every
/// party basis mask.
struct BranchTable {
  struct Branch {
    EveLog log;
    std::vector<std::vector<double>> born;  // per conjugate mask
    std::vector<Sampler> samplers;
  };
  std::vector<int> targets;
  bool random_bases = false;
  // indexed by Eve's basis tuple (bit k set: conjugate on target k)
  std::vector<std::vector<Branch>> branches;
  std::vector<std::vector<double>> weights;

  BranchTable(const PureState& s, std::vector<int> subsystems, EveBasisPolicy policy,
              const std::vector<BasisAssignment>& assignments)
      : targets(std::move(subsystems)), random_bases(policy == EveBasisPolicy::random_per_round) {
    const std::size_t tuples = random_bases ? std::size_t{1} << targets.size() : 1;
    branches.resize(tuples);
    weights.resize(tuples);
    for (std::size_t t = 0; t < tuples; ++t) {
      auto recurse = [&](auto&& self, const PureState& state, std::size_t depth, double w, EveLog log) -> void {
        if (depth == targets.size()) {
          Branch b;
          b.log = std::move(log);
          for (const auto& a : assignments) {
            b.born.push_back(born_probabilities(state, a));
            b.samplers.emplace_back(state, a);
          }
          branches[t].push_back(std::move(b));
          weights[t].push_back(w);
          return;
        }
        const auto sub = static_cast<std::size_t>(targets[depth]);
        const int d = state.dims()[sub];
        const bool conj = random_bases ? (t >> depth & 1u) : policy == EveBasisPolicy::conjugate;
        const auto eb = conj ? conjugate_basis<double>(d) : basis<double>(BasisKind::computational, d);
        for (int k = 0; k < d; ++k) {
          try {
            const auto proj = project_subsystem(state, sub, eb, k);
            auto next = log;
            next.push_back({targets[depth], eb.kind, k});
            self(self, proj.collapsed, depth + 1, w * proj.probability, std::move(next));
          } catch (const ZeroProbabilityBranch&) {
          }
        }
      };
      recurse(recurse, s, 0, 1.0, {});
    }
  }

  const Branch& draw(Rng& rng, EveLog* truth) const {
    std::size_t t = 0;
    if (random_bases)
      for (std::size_t k = 0; k < targets.size(); ++k)
        if (!bernoulli(rng, 0.5)) t |= std::size_t{1} << k;
    const auto& b = branches[t][sample_weights<double>(rng, weights[t])];
    if (truth) truth->insert(truth->end(), b.log.begin(), b.log.end());
    return b;
  }
};

unsigned conjugate_mask(const std::vector<BasisChoice>& bases) {
  unsigned mask = 0;
  for (std::size_t p = 0; p < bases.size(); ++p)
    if (bases[p] == BasisChoice::conjugate) mask |= 1u << p;
  return mask;
}

}  // namespace

struct Session::Impl {
  SessionConfig config;
  Resource resource;
  std::vector<int> eve_targets;  // subsystems, resolved against the transmitted state

  // entangled protocols
  std::optional<Layout> layout;
  std::vector<std::vector<double>> born;  // no-Eve probabilities per conjugate mask
  std::vector<Sampler> samplers;

  // prepare-and-measure protocols: [basis][symbol][bob mask]
  std::optional<Layout> prep_layout;
  std::map<std::tuple<int, int, unsigned>, Sampler> prep_samplers;

  // Eve active: one table for the entangled source, or one per preparation
  std::optional<BranchTable> eve_table;
  std::map<std::pair<int, int>, BranchTable> prep_eve_tables;

  explicit Impl(SessionConfig c) : config(std::move(c)), resource(build_resource(config.protocol)) {
    config.validate();
    if (const auto* state = std::get_if<PureState>(&resource)) {
      layout.emplace(*state, config.protocol);
      for (const auto& a : layout->assignments) {
        born.push_back(born_probabilities(*state, a));
        samplers.emplace_back(*state, a);
      }
      eve_targets = resolve_targets(config.eve, state->labels(), retained_label(config.protocol));
      if (!eve_targets.empty()) eve_table.emplace(*state, eve_targets, config.eve.basis, layout->assignments);
    } else {
      const auto& preps = std::get<PreparationSampler>(resource);
      const auto& first = preps.get(BasisChoice::computational, 0).state;
      prep_layout.emplace(first, config.protocol);
      for (auto b : {BasisChoice::computational, BasisChoice::conjugate})
        for (const auto& prep : preps.set(b))
          for (unsigned mask = 0; mask < (1u << kParties); mask += 2)
            prep_samplers.emplace(std::tuple{static_cast<int>(b), prep.symbol, mask},
                                  Sampler(prep.state, prep_layout->assignments[mask]));
      eve_targets = resolve_targets(config.eve, first.labels(), retained_label(config.protocol));
      if (!eve_targets.empty())
        for (auto b : {BasisChoice::computational, BasisChoice::conjugate})
          for (const auto& prep : preps.set(b))
            prep_eve_tables.emplace(std::pair{static_cast<int>(b), prep.symbol},
                                    BranchTable(prep.state, eve_targets, config.eve.basis, prep_layout->assignments));
    }
  }

  BasisChoice draw_basis(Rng& rng, std::size_t party) const {
    return bernoulli(rng, config.computational_probability(party)) ? BasisChoice::computational
                                                                    : BasisChoice::conjugate;
  }

  CharlieAction draw_action(Rng& rng) const {
    const auto& pol = config.charlie;
    const double u = uniform01(rng);
    if (u < pol.key) return CharlieAction::key;
    if (u < pol.key + pol.secret) return CharlieAction::secret;
    if (u < pol.key + pol.secret + pol.conjugate_check) return CharlieAction::conjugate_check;
    return CharlieAction::decoy;
  }

  std::size_t sample_entangled(unsigned mask, Rng& rng, EveLog* truth) const {
    if (eve_targets.empty()) return samplers[mask].sample_flat(rng);
    return eve_table->draw(rng, truth).samplers[mask].sample_flat(rng);
  }

  RoundRecord layered_round(RoundRecord r, Rng& rng, EveLog* truth) const {
    for (std::size_t p = 0; p < kParties; ++p) r.bases.push_back(draw_basis(rng, p));
    r.outcomes.assign(kParties, 0);
    layout->write_outcomes(sample_entangled(conjugate_mask(r.bases), rng, truth), r.outcomes);
    return r;
  }

  RoundRecord prepared_round(RoundRecord r, Rng& rng, EveLog* truth) const {
    const auto& preps = std::get<PreparationSampler>(resource);
    const auto& prep = preps.draw(rng, config.computational_probability(0));
    r.bases.push_back(prep.basis);
    for (std::size_t p = 1; p < kParties; ++p) r.bases.push_back(draw_basis(rng, p));
    r.outcomes.assign(kParties, 0);
    r.outcomes[0] = prep.symbol;
    const unsigned mask = conjugate_mask(r.bases) & ~1u;
    std::size_t flat;
    if (eve_targets.empty()) {
      flat = prep_samplers.at({static_cast<int>(prep.basis), prep.symbol, mask}).sample_flat(rng);
    } else {
      const auto& table = prep_eve_tables.at({static_cast<int>(prep.basis), prep.symbol});
      flat = table.draw(rng, truth).samplers[mask].sample_flat(rng);
    }
    prep_layout->write_outcomes(flat, r.outcomes);
    return r;
  }

  RoundRecord controlled_round(RoundRecord r, Rng& rng, EveLog* truth) const {
    r.action = draw_action(rng);
    if (r.action == CharlieAction::decoy) return decoy_round_record(std::move(r), rng, truth);

    const BasisChoice alice = draw_basis(rng, 0);
    const BasisChoice bob = draw_basis(rng, 2);
    const BasisChoice charlie =
        r.action == CharlieAction::conjugate_check ? BasisChoice::conjugate : BasisChoice::computational;
    r.bases = {alice, charlie, bob};
    const unsigned mask = conjugate_mask(r.bases);
    r.outcomes.assign(kParties, 0);

    if (r.action == CharlieAction::conjugate_check) {
      layout->write_outcomes(sample_entangled(mask, rng, truth), r.outcomes);
      return r;
    }

    // Charlie's projector is heralded: the round is drawn from the branch
    // selected by his action (pi_3 for secret, pi_0..pi_2 for key).
    const auto& full = eve_targets.empty() ? born[mask] : eve_table->draw(rng, truth).born[mask];
    std::vector<double> p = full;
    double kept = 0;
    for (std::size_t flat = 0; flat < p.size(); ++flat) {
      const int c = static_cast<int>(flat / 4 % 4);
      const bool in_branch = r.action == CharlieAction::secret ? c == 3 : c != 3;
      if (!in_branch) p[flat] = 0;
      kept += p[flat];
    }
    if (kept < 1e-12) {
      // the channel left nothing in the requested branch; Charlie's herald never fires
      r.action = CharlieAction::herald_failed;
      layout->write_outcomes(sample_weights<double>(rng, full), r.outcomes);
      return r;
    }
    layout->write_outcomes(sample_weights<double>(rng, p), r.outcomes);
    return r;
  }

  RoundRecord decoy_round_record(RoundRecord r, Rng& rng, EveLog* truth) const {
    r.decoys = decoy_round(rng, 4, {"alice", "bob"});
    const BasisChoice alice = draw_basis(rng, 0);
    const BasisChoice bob = draw_basis(rng, 2);
    r.bases = {alice, BasisChoice::none, bob};
    r.outcomes.assign(kParties, 0);
    for (const auto& pulse : r.decoys) {
      const std::size_t party = pulse.target == "alice" ? 0 : 2;
      auto state = decoy_state(pulse, 4);
      if (config.eve.active() &&
          std::find(config.eve.targets.begin(), config.eve.targets.end(), pulse.target) != config.eve.targets.end())
        state = apply_intercept_resend(state, {0}, config.eve.basis, rng, truth);
      const auto p = born_probabilities(state, BasisAssignment{basis_for(r.bases[party], 4)});
      r.outcomes[party] = static_cast<int>(sample_weights<double>(rng, p));
    }
    return r;
  }
};

Session::Session(SessionConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {}
Session::~Session() = default;
Session::Session(Session&&) noexcept = default;
Session& Session::operator=(Session&&) noexcept = default;

const SessionConfig& Session::config() const { return impl_->config; }

RoundRecord Session::run_round(std::uint64_t round_id, Rng& rng, EveLog* truth) const {
  RoundRecord r;
  r.round = round_id;
  r.protocol = impl_->config.protocol;
  switch (r.protocol) {
    case ProtocolId::p1:
    case ProtocolId::p3:
    case ProtocolId::bd_ssskd: return impl_->layered_round(std::move(r), rng, truth);
    case ProtocolId::p2:
    case ProtocolId::p4: return impl_->prepared_round(std::move(r), rng, truth);
    case ProtocolId::c_sskd: return impl_->controlled_round(std::move(r), rng, truth);
  }
  throw std::logic_error("unknown protocol");
}

std::vector<RoundRecord> Session::run(unsigned workers, std::vector<EveLog>* truth) const {
  const std::uint64_t n = impl_->config.rounds;
  std::vector<RoundRecord> records(n);
  if (truth) truth->assign(n, {});
  const std::uint64_t blocks = (n + kRoundBlock - 1) / kRoundBlock;
  const auto run_blocks = [&](std::uint64_t first, std::uint64_t last) {
    for (std::uint64_t b = first; b < last; ++b) {
      auto rng = round_rng(impl_->config.seed, b);
      for (std::uint64_t i = b * kRoundBlock; i < std::min(n, (b + 1) * kRoundBlock); ++i)
        records[i] = run_round(i, rng, truth ? &(*truth)[i] : nullptr);
    }
  };
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(blocks, 1)));
  if (workers == 1) {
    run_blocks(0, blocks);
    return records;
  }
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (blocks + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk, end = std::min(blocks, begin + chunk);
    if (begin < end) threads.emplace_back(run_blocks, begin, end);
  }
  for (auto& t : threads) t.join();
  return records;
}

RoundClass classify(const RoundRecord& r) {
  const auto& b = r.bases;
  const auto all_equal = [&](BasisChoice c) { return std::all_of(b.begin(), b.end(), [c](auto x) { return x == c; }); };
  switch (r.protocol) {
    case ProtocolId::p1:
    case ProtocolId::p3:
      if (all_equal(BasisChoice::computational)) return RoundClass::key_all;
      if (all_equal(BasisChoice::conjugate)) return RoundClass::check;
      return RoundClass::discard;
    case ProtocolId::p2:
    case ProtocolId::p4:
      if (b[0] != b[1]) return RoundClass::discard;
      return b[2] == b[0] ? RoundClass::key_all : RoundClass::key_L1;
    case ProtocolId::c_sskd:
      switch (r.action) {
        case CharlieAction::conjugate_check: return RoundClass::check;
        case CharlieAction::decoy: return RoundClass::decoy;
        case CharlieAction::secret: return b[0] == b[2] ? RoundClass::secret : RoundClass::discard;
        case CharlieAction::key:
          return b[0] == BasisChoice::conjugate && b[2] == BasisChoice::conjugate ? RoundClass::key_all
                                                                                   : RoundClass::discard;
        default: return RoundClass::discard;
      }
    case ProtocolId::bd_ssskd:
      if (const auto mode = bd_mode_of(b)) {
        switch (*mode) {
          case BdMode::CC_C: return RoundClass::key_all;
          case BdMode::JJ_J: return RoundClass::secret;
          case BdMode::CC_J: return RoundClass::key_L1;
          case BdMode::JJ_C: return RoundClass::secret_L1;
        }
      }
      return RoundClass::discard;
  }
  return RoundClass::discard;
}

std::vector<RoundRecord> sift(std::vector<RoundRecord> records, ProtocolId protocol, double check_fraction,
                              std::uint64_t seed) {
  if (records.empty()) throw std::invalid_argument("cannot sift an empty record set");
  std::map<RoundClass, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto& r = records[i];
    if (r.protocol != protocol) throw std::invalid_argument("record protocol does not match sift protocol");
    r.cls = classify(r);
    if (r.cls != RoundClass::check && r.cls != RoundClass::decoy && r.cls != RoundClass::discard)
      by_class[r.cls].push_back(i);
  }
  const std::uint64_t salt = mix64(seed ^ 0x636865636b5f7365ULL);
  for (auto& [cls, members] : by_class) {
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      const auto ha = mix64(salt ^ records[a].round), hb = mix64(salt ^ records[b].round);
      return ha != hb ? ha < hb : records[a].round < records[b].round;
    });
    const auto take = static_cast<std::size_t>(std::llround(check_fraction * static_cast<double>(members.size())));
    for (std::size_t k = 0; k < take; ++k) records[members[k]].cls = RoundClass::check;
  }
  return records;
}

}  // namespace layerq
