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

#include "layerq/analysis/tables.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "layerq/qudit/library.hpp"
#include "layerq/qudit/measure.hpp"

namespace layerq {

using json = nlohmann::ordered_json;

std::string_view to_string(TableId id) {
  switch (id) {
    case TableId::T3: return "T3";
    case TableId::T4: return "T4";
    case TableId::T5: return "T5";
  }
  return "?";
}

std::optional<TableId> parse_table_id(std::string_view s) {
  if (!s.empty() && (s.front() == 'T' || s.front() == 't')) s.remove_prefix(1);
  if (s == "3") return TableId::T3;
  if (s == "4") return TableId::T4;
  if (s == "5") return TableId::T5;
  return std::nullopt;
}

namespace {

constexpr double kZero = 1e-12;

int a(const IndexTuple& t) { return t[0]; }
int b1(const IndexTuple& t) { return t[1]; }
int b2(const IndexTuple& t) { return t[2]; }
int a_hi(const IndexTuple& t) { return t[0] >> 1; }
int a_lo(const IndexTuple& t) { return t[0] & 1; }
int b1_hi(const IndexTuple& t) { return t[1] >> 1; }
int b1_lo(const IndexTuple& t) { return t[1] & 1; }

Relation equality(std::string name, TupleFn l, TupleFn r) {
  return {std::move(name), Relation::Kind::equality, std::move(l), std::move(r)};
}
Relation independence(std::string name, TupleFn l, TupleFn r) {
  return {std::move(name), Relation::Kind::independence, std::move(l), std::move(r)};
}

RelationResult evaluate(const Relation& rel, const DistributionTable& table) {
  RelationResult out;
  out.name = rel.name;
  const auto support = table.support(kZero);
  if (rel.kind == Relation::Kind::equality) {
    out.kind = "equality";
    for (const auto& [t, p] : support)
      if (rel.lhs(t) != rel.rhs(t)) out.counterexamples.push_back(t);
  } else {
    out.kind = "independence";
    std::map<std::pair<int, int>, double> joint;
    std::map<int, double> pl, pr;
    std::map<std::pair<int, int>, IndexTuple> witness;
    for (const auto& [t, p] : support) {
      const int l = rel.lhs(t), r = rel.rhs(t);
      joint[{l, r}] += p;
      pl[l] += p;
      pr[r] += p;
      witness.emplace(std::pair{l, r}, t);
    }
    for (const auto& [l, ql] : pl)
      for (const auto& [r, qr] : pr) {
        const auto it = joint.find({l, r});
        const double pj = it == joint.end() ? 0.0 : it->second;
        if (std::abs(pj - ql * qr) > 1e-10) {
          auto w = witness.find({l, r});
          if (w != witness.end()) {
            out.counterexamples.push_back(w->second);
          } else {
            // a value pair that never occurs: report the first tuple carrying either value
            for (const auto& [t, p] : support)
              if (rel.lhs(t) == l) {
                out.counterexamples.push_back(t);
                break;
              }
          }
        }
      }
  }
  out.holds = out.counterexamples.empty();
  return out;
}

std::string tuple_text(const IndexTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string probability_text(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", p);
  return buf;
}

}  // namespace

TableSpec table_spec(TableId id) {
  const auto C = BasisChoice::computational, J = BasisChoice::conjugate;
  TableSpec s;
  s.id = id;
  switch (id) {
    case TableId::T3:
      s.caption = "Correlations in the outcome of Alice, Bob1, and Bob2 in the computational basis";
      s.bases = {C, C, C};
      s.claimed_support = {{0, 0, 0}, {1, 1, 1}, {2, 2, 0}, {3, 3, 1}};
      s.relations = {equality("a = b1", a, b1), equality("b2 = a0", b2, a_lo), equality("L1 key a1 = b1_1", a_hi, b1_hi),
                     equality("L2 key a0 = b1_0", a_lo, b1_lo)};
      break;
    case TableId::T4:
      s.caption =
          "Correlations in the outcome of Alice, and Bob1 choose the computational basis, and Bob2 choose the "
          "conjugate basis";
      s.bases = {C, C, J};
      s.claimed_support = {{0, 0, 0}, {1, 1, 0}, {2, 2, 0}, {3, 3, 0}, {0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}};
      s.relations = {equality("L1 key a1 = b1_1", a_hi, b1_hi),
                     equality("s = a0 ^ b1_0 = b2", [](const IndexTuple& t) { return a_lo(t) ^ b1_lo(t); }, b2)};
      s.probes = {equality("a = b1", a, b1),
                  independence("b2 independent of (a, b1)", [](const IndexTuple& t) { return 4 * t[0] + t[1]; }, b2)};
      break;
    case TableId::T5:
      s.caption =
          "Correlations in the outcomes when Alice and Bob1 choose the conjugate basis, and Bob2 choose the "
          "computational basis";
      s.bases = {J, J, C};
      s.claimed_support = {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {2, 2, 0}, {2, 3, 0}, {3, 2, 0}, {3, 3, 0},
                           {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 1, 1}, {3, 0, 1}, {3, 1, 1}, {2, 0, 1}};
      s.relations = {
          equality("s2 = a1 ^ b1_1 = b2", [](const IndexTuple& t) { return a_hi(t) ^ b1_hi(t); }, b2),
          independence("s1 = a0 ^ b1_0 independent of b2", [](const IndexTuple& t) { return a_lo(t) ^ b1_lo(t); }, b2)};
      break;
  }
  return s;
}

VerificationReport verify_table(const TableSpec& spec) { return verify_table(spec, states::basis_dependent_resource()); }

VerificationReport verify_table(const TableSpec& spec, const PureState& state) {
  if (spec.bases.size() != state.num_subsystems())
    throw std::invalid_argument("table basis assignment does not match the state");
  BasisAssignment bases;
  for (std::size_t k = 0; k < spec.bases.size(); ++k) bases.push_back(basis_for(spec.bases[k], state.dims()[k]));
  const auto table = joint_distribution(state, bases);

  VerificationReport r;
  r.table = spec.id;
  r.caption = spec.caption;
  r.bases = spec.bases;
  for (const auto& [t, p] : table.support(kZero)) r.oracle_support.push_back(t);
  r.claimed_support = spec.claimed_support;
  std::sort(r.claimed_support.begin(), r.claimed_support.end());

  std::set<IndexTuple> oracle(r.oracle_support.begin(), r.oracle_support.end());
  std::set<IndexTuple> claimed(r.claimed_support.begin(), r.claimed_support.end());
  r.support_match = oracle == claimed;
  std::set<IndexTuple> all = oracle;
  all.insert(claimed.begin(), claimed.end());
  for (const auto& t : all) {
    for (std::size_t k = 0; k < t.size(); ++k)
      if (t[k] < 0 || t[k] >= state.dims()[k]) throw std::invalid_argument("claimed tuple outside dims");
    r.distribution.emplace_back(t, table.probability(t));
  }

  for (const auto& t : claimed)
    if (!oracle.count(t)) r.findings.push_back("claimed tuple " + tuple_text(t) + " has oracle probability 0");
  for (const auto& t : oracle)
    if (!claimed.count(t))
      r.findings.push_back("oracle tuple " + tuple_text(t) + " with probability " +
                           probability_text(table.probability(t)) + " is not claimed");

  r.relation_match = true;
  for (const auto& rel : spec.relations) {
    auto res = evaluate(rel, table);
    if (!res.holds) {
      r.relation_match = false;
      r.findings.push_back("relation '" + res.name + "' fails on " + std::to_string(res.counterexamples.size()) +
                           " oracle tuple(s), e.g. " + tuple_text(res.counterexamples.front()));
    }
    r.relations.push_back(std::move(res));
  }
  for (const auto& rel : spec.probes) {
    auto res = evaluate(rel, table);
    r.findings.push_back("oracle: '" + res.name + "' " + (res.holds ? "holds" : "fails"));
    r.probes.push_back(std::move(res));
  }
  return r;
}

namespace {

json relations_json(const std::vector<RelationResult>& rs) {
  json out = json::array();
  for (const auto& rr : rs)
    out.push_back({{"name", rr.name}, {"kind", rr.kind}, {"holds", rr.holds}, {"counterexamples", rr.counterexamples}});
  return out;
}

std::vector<RelationResult> relations_from(const json& j) {
  std::vector<RelationResult> out;
  for (const auto& x : j)
    out.push_back({x.at("name").get<std::string>(), x.at("kind").get<std::string>(), x.at("holds").get<bool>(),
                   x.at("counterexamples").get<std::vector<IndexTuple>>()});
  return out;
}

}  // namespace

std::string report_to_json(const VerificationReport& r, int indent) {
  json j;
  j["table"] = std::string(to_string(r.table));
  j["caption"] = r.caption;
  j["bases"] = json::array();
  for (auto b : r.bases) j["bases"].push_back(std::string(to_string(b)));
  j["consistent"] = r.consistent();
  j["supportMatch"] = r.support_match;
  j["relationMatch"] = r.relation_match;
  j["oracleSupport"] = r.oracle_support;
  j["claimedSupport"] = r.claimed_support;
  j["relations"] = relations_json(r.relations);
  j["probes"] = relations_json(r.probes);
  j["distributions"] = json::array();
  for (const auto& [t, p] : r.distribution)
    j["distributions"].push_back({{"outcome", t}, {"probability", std::stod(probability_text(p))}});
  j["findings"] = r.findings;
  return j.dump(indent);
}

VerificationReport report_from_json(const std::string& text) {
  try {
    const auto j = json::parse(text);
    VerificationReport r;
    const auto id = parse_table_id(j.at("table").get<std::string>());
    if (!id) throw std::invalid_argument("unknown table id");
    r.table = *id;
    r.caption = j.at("caption").get<std::string>();
    for (const auto& b : j.at("bases")) {
      const auto c = parse_basis_choice(b.get<std::string>());
      if (!c) throw std::invalid_argument("bad basis");
      r.bases.push_back(*c);
    }
    r.support_match = j.at("supportMatch").get<bool>();
    r.relation_match = j.at("relationMatch").get<bool>();
    r.oracle_support = j.at("oracleSupport").get<std::vector<IndexTuple>>();
    r.claimed_support = j.at("claimedSupport").get<std::vector<IndexTuple>>();
    r.relations = relations_from(j.at("relations"));
    r.probes = relations_from(j.at("probes"));
    for (const auto& d : j.at("distributions"))
      r.distribution.emplace_back(d.at("outcome").get<IndexTuple>(), d.at("probability").get<double>());
    r.findings = j.at("findings").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace layerq
