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

#include "layerq/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "layerq/analysis/check.hpp"
#include "layerq/analysis/rates.hpp"
#include "layerq/analysis/tables.hpp"
#include "layerq/protocol/extract.hpp"
#include "layerq/protocol/records_io.hpp"
#include "layerq/protocol/session.hpp"
#include "layerq/qudit/factorize.hpp"
#include "layerq/qudit/library.hpp"
#include "layerq/qudit/measure.hpp"

#ifndef LAYERQ_VERSION
#define LAYERQ_VERSION "0.0.0"
#endif

namespace layerq::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string version() { return LAYERQ_VERSION; }

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", p);
  return buf;
}

std::string tuple_text(const IndexTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    if (s.empty() || s.front() == '-') throw std::invalid_argument(s);
    const auto v = std::stoull(s, &pos, 0);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + " '" + s + "'");
  }
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + " '" + s + "'");
  }
}

// --- run ------------------------------------------------------------------

struct RunOptions {
  SessionConfig config;
  CheckPolicy policy;
  unsigned workers = 1;
  std::string out_dir = "layerq-run";
  std::string config_path;
  bool csv = false;
};

struct RunFlags {
  std::string protocol, rounds, seed, eve, basis_prob, check_fraction, threshold, min_samples, config, out, workers;
  bool csv = false;
};

std::vector<double> parse_basis_probabilities(const std::string& s, ProtocolId id) {
  std::vector<double> out;
  for (const auto& item : split_list(s)) out.push_back(parse_double(item, "basis probability"));
  if (out.size() == 1) out.assign(party_names(id).size(), out.front());
  return out;
}

void apply_config_file(RunOptions& o, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("malformed config file '" + path + "': " + e.what());
  }
  try {
    auto& c = o.config;
    if (j.contains("protocol")) {
      const auto id = parse_protocol(j["protocol"].get<std::string>());
      if (!id) throw UsageError("unknown protocol '" + j["protocol"].get<std::string>() + "'");
      c.protocol = *id;
    }
    if (j.contains("rounds")) c.rounds = j["rounds"].get<std::uint64_t>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("eve")) c.eve = EveStrategy::parse(j["eve"].get<std::string>());
    if (j.contains("basisProbabilities")) {
      const auto& b = j["basisProbabilities"];
      c.basis_probabilities = b.is_array() ? b.get<std::vector<double>>()
                                           : std::vector<double>(party_names(c.protocol).size(), b.get<double>());
    }
    if (j.contains("checkFraction")) c.check_fraction = j["checkFraction"].get<double>();
    if (j.contains("charliePolicy")) {
      const auto& p = j["charliePolicy"];
      c.charlie.key = p.value("key", c.charlie.key);
      c.charlie.secret = p.value("secret", c.charlie.secret);
      c.charlie.conjugate_check = p.value("conjugateCheck", c.charlie.conjugate_check);
      c.charlie.decoy = p.value("decoy", c.charlie.decoy);
    }
    if (j.contains("threshold")) o.policy.threshold = j["threshold"].get<double>();
    if (j.contains("minSamples")) o.policy.min_samples = j["minSamples"].get<std::size_t>();
    if (j.contains("workers")) o.workers = j["workers"].get<unsigned>();
    if (j.contains("out")) o.out_dir = j["out"].get<std::string>();
  } catch (const json::exception& e) {
    throw UsageError("bad value in config file '" + path + "': " + e.what());
  }
}

RunOptions resolve_run_options(const RunFlags& f) {
  RunOptions o;
  if (const char* env = std::getenv("LAYERQ_SEED"); env && *env) o.config.seed = parse_u64(env, "LAYERQ_SEED");
  if (!f.config.empty()) {
    o.config_path = f.config;
    apply_config_file(o, f.config);
  }
  auto& c = o.config;
  if (!f.protocol.empty()) {
    const auto id = parse_protocol(f.protocol);
    if (!id) throw UsageError("unknown protocol '" + f.protocol + "'");
    c.protocol = *id;
  }
  if (!f.rounds.empty()) c.rounds = parse_u64(f.rounds, "round count");
  if (!f.seed.empty()) c.seed = parse_u64(f.seed, "seed");
  if (!f.eve.empty()) c.eve = EveStrategy::parse(f.eve);
  if (!f.basis_prob.empty()) c.basis_probabilities = parse_basis_probabilities(f.basis_prob, c.protocol);
  if (!f.check_fraction.empty()) c.check_fraction = parse_double(f.check_fraction, "check fraction");
  if (!f.threshold.empty()) o.policy.threshold = parse_double(f.threshold, "threshold");
  if (!f.min_samples.empty()) o.policy.min_samples = parse_u64(f.min_samples, "minimum sample count");
  if (!f.workers.empty()) o.workers = static_cast<unsigned>(parse_u64(f.workers, "worker count"));
  if (!f.out.empty()) o.out_dir = f.out;
  o.csv = f.csv;
  if (o.workers < 1) throw UsageError("worker count must be at least 1");
  if (!(o.policy.threshold > 0 && o.policy.threshold < 1)) throw UsageError("threshold must lie in (0, 1)");
  c.validate();
  return o;
}

json config_json(const RunOptions& o) {
  const auto& c = o.config;
  json j;
  j["protocol"] = std::string(to_string(c.protocol));
  j["rounds"] = c.rounds;
  j["seed"] = c.seed;
  j["eve"] = c.eve.to_string();
  std::vector<double> probs;
  for (std::size_t p = 0; p < party_names(c.protocol).size(); ++p) probs.push_back(c.computational_probability(p));
  j["basisProbabilities"] = probs;
  j["checkFraction"] = c.check_fraction;
  j["charliePolicy"] = {{"key", c.charlie.key},
                        {"secret", c.charlie.secret},
                        {"conjugateCheck", c.charlie.conjugate_check},
                        {"decoy", c.charlie.decoy}};
  j["threshold"] = o.policy.threshold;
  j["minSamples"] = o.policy.min_samples;
  j["samplesPerOutcome"] = o.policy.samples_per_outcome;
  j["workers"] = o.workers;
  j["out"] = o.out_dir;
  return j;
}

int bits_per_symbol(int alphabet) {
  int b = 0;
  while ((1 << b) < alphabet) ++b;
  return std::max(b, 1);
}

/// Symbols packed most significant bit first, padded with zero bits.
std::string to_hex(const std::vector<int>& symbols, int alphabet) {
  const int width = bits_per_symbol(alphabet);
  std::vector<int> bits;
  for (int s : symbols)
    for (int b = width - 1; b >= 0; --b) bits.push_back((s >> b) & 1);
  while (bits.size() % 4) bits.push_back(0);
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 4)
    out += digits[bits[i] << 3 | bits[i + 1] << 2 | bits[i + 2] << 1 | bits[i + 3]];
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
}

std::string material_stem(const std::string& kind, const std::string& layer, const std::string& tag) {
  std::string stem = kind + "_" + layer + "_" + tag;
  std::replace(stem.begin(), stem.end(), '-', '_');
  return stem;
}

std::vector<std::string> write_material(const fs::path& dir, const Extraction& ex) {
  std::vector<std::string> written;
  for (const auto& k : ex.keys) {
    const auto stem = material_stem("key", k.layer, std::string(to_string(k.source)));
    std::ostringstream hex, tsv;
    tsv << "round";
    for (const auto& p : k.parties) tsv << '\t' << p;
    tsv << '\n';
    for (std::size_t i = 0; i < k.length(); ++i) {
      tsv << k.rounds[i];
      for (const auto& row : k.symbols) tsv << '\t' << row[i];
      tsv << '\n';
    }
    for (std::size_t p = 0; p < k.parties.size(); ++p)
      hex << k.parties[p] << ' ' << k.length() << ' ' << to_hex(k.symbols[p], k.alphabet) << '\n';
    write_file(dir / (stem + ".hex"), hex.str());
    write_file(dir / (stem + ".tsv"), tsv.str());
    written.push_back(stem + ".hex");
    written.push_back(stem + ".tsv");
  }
  for (const auto& s : ex.secrets) {
    const auto stem = material_stem("secret", s.layer, s.population);
    std::ostringstream tsv;
    tsv << "round\tsecret";
    for (const auto& p : s.parties) tsv << '\t' << p;
    if (!s.claimed_equal.empty()) tsv << "\tclaimed_equal";
    tsv << '\n';
    for (std::size_t i = 0; i < s.rounds.size(); ++i) {
      tsv << s.rounds[i] << '\t' << s.secrets[i];
      for (const auto& row : s.shares) tsv << '\t' << row[i];
      if (!s.claimed_equal.empty()) tsv << '\t' << s.claimed_equal[i];
      tsv << '\n';
    }
    write_file(dir / (stem + ".tsv"), tsv.str());
    written.push_back(stem + ".tsv");
  }
  return written;
}

json verdict_json(const EavesdropVerdict& v) {
  json j;
  j["decision"] = std::string(to_string(v.decision));
  j["threshold"] = v.threshold;
  j["minSamples"] = v.min_samples;
  j["combinations"] = json::array();
  for (const auto& c : v.combinations) {
    json x;
    x["combination"] = c.combination;
    x["samples"] = c.samples;
    x["oracleSupport"] = c.oracle_support;
    x["supportViolation"] = c.support_violation ? json(*c.support_violation) : json(nullptr);
    x["tv"] = c.tv ? json(*c.tv) : json(nullptr);
    x["exceeds"] = c.exceeds;
    j["combinations"].push_back(std::move(x));
  }
  return j;
}

json summary_json(const RunOptions& o, const std::vector<RoundRecord>& sifted, const RateReport& rates,
                  const Extraction& ex, const EavesdropVerdict& verdict) {
  json j;
  j["protocol"] = std::string(to_string(o.config.protocol));
  j["rounds"] = o.config.rounds;
  j["seed"] = o.config.seed;
  j["eve"] = o.config.eve.to_string();
  std::map<RoundClass, std::size_t> classes;
  std::map<CharlieAction, std::size_t> actions;
  for (const auto& r : sifted) {
    ++classes[r.cls];
    ++actions[r.action];
  }
  j["classCounts"] = json::object();
  for (const auto& [c, n] : classes) j["classCounts"][std::string(to_string(c))] = n;
  if (o.config.protocol == ProtocolId::c_sskd) {
    j["actionCounts"] = json::object();
    for (const auto& [a, n] : actions) j["actionCounts"][std::string(to_string(a))] = n;
  }
  j["rates"] = json::array();
  for (const auto& e : rates.entries) {
    json x;
    x["kind"] = e.kind;
    x["layer"] = e.layer;
    x["class"] = e.cls;
    x["population"] = e.population;
    x["alphabet"] = e.alphabet;
    x["symbols"] = e.symbols;
    x["classRounds"] = e.class_rounds;
    x["bitsPerRound"] = e.bits_per_round;
    x["bitsPerClassRound"] = e.bits_per_class_round;
    x["qber"] = e.qber ? json(*e.qber) : json(nullptr);
    j["rates"].push_back(std::move(x));
  }
  j["secrets"] = json::array();
  for (const auto& s : ex.secrets) {
    json x;
    x["layer"] = s.layer;
    x["population"] = s.population;
    x["count"] = s.secrets.size();
    if (!s.claimed_equal.empty()) {
      std::size_t agree = 0;
      for (std::size_t i = 0; i < s.secrets.size(); ++i) agree += s.secrets[i] == s.claimed_equal[i];
      x["claimedEqualFraction"] = static_cast<double>(agree) / static_cast<double>(s.secrets.size());
    }
    j["secrets"].push_back(std::move(x));
  }
  j["verdict"] = verdict_json(verdict);
  return j;
}

std::string summary_csv(const RateReport& rates) {
  std::ostringstream csv;
  csv << "kind,layer,class,population,alphabet,symbols,class_rounds,bits_per_round,bits_per_class_round,qber\n";
  for (const auto& e : rates.entries) {
    csv << e.kind << ',' << e.layer << ',' << e.cls << ',' << e.population << ',' << e.alphabet << ',' << e.symbols
        << ',' << e.class_rounds << ',' << format_probability(e.bits_per_round) << ','
        << format_probability(e.bits_per_class_round) << ',' << (e.qber ? format_probability(*e.qber) : "") << '\n';
  }
  return csv.str();
}

int cmd_run(const RunFlags& flags, std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  const RunOptions o = resolve_run_options(flags);
  const Session session(o.config);
  const auto sifted = sift(session.run(o.workers), o.config.protocol, o.config.check_fraction, o.config.seed);

  const auto ex = extract_all(sifted, o.config.protocol);
  const auto rates = key_rate(sifted, o.config.protocol);
  const auto samples = collect_check_samples(sifted);
  EavesdropVerdict verdict;
  verdict.threshold = o.policy.threshold;
  verdict.min_samples = o.policy.min_samples;
  if (!samples.empty()) verdict = empirical_check(samples, build_oracle_book(o.config.protocol), o.policy);

  const fs::path dir(o.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create output directory '" + o.out_dir + "': " + ec.message());
  std::vector<std::string> outputs{"records.jsonl", "summary.json"};
  {
    std::ostringstream records;
    write_records(records, sifted);
    write_file(dir / "records.jsonl", records.str());
  }
  write_file(dir / "summary.json", summary_json(o, sifted, rates, ex, verdict).dump(2) + "\n");
  if (o.csv) {
    write_file(dir / "summary.csv", summary_csv(rates));
    outputs.push_back("summary.csv");
  }
  for (auto& f : write_material(dir, ex)) outputs.push_back(std::move(f));

  const int code = verdict.decision == Decision::accept  ? kAccept
                   : verdict.decision == Decision::abort ? kAbort
                                                         : kInconclusive;
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  json manifest;
  manifest["tool"] = "layerq";
  manifest["version"] = version();
  manifest["config"] = config_json(o);
  manifest["configPath"] = o.config_path.empty() ? json(nullptr) : json(o.config_path);
  manifest["outputs"] = outputs;
  manifest["exitCode"] = code;
  manifest["wallClockSeconds"] = seconds;
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");

  out << "protocol " << to_string(o.config.protocol) << ", " << o.config.rounds << " rounds, seed " << o.config.seed
      << ", eve " << o.config.eve.to_string() << "\n";
  for (const auto& e : rates.entries) {
    out << "  " << e.kind << ' ' << e.layer << ' ' << e.cls;
    if (!e.population.empty()) out << " [" << e.population << "]";
    out << ": " << e.symbols << " symbols, " << format_probability(e.bits_per_round) << " bits/round";
    if (e.qber) out << ", qber " << format_probability(*e.qber);
    out << '\n';
  }
  out << "verdict: " << to_string(verdict.decision) << '\n';
  out << "wrote " << o.out_dir << '\n';
  return code;
}

// --- oracle ---------------------------------------------------------------

BasisSet parse_basis_token(const std::string& token, int d) {
  if (token == "comp" || token == "computational") return basis_for(BasisChoice::computational, d);
  if (token == "conj" || token == "conjugate") return basis_for(BasisChoice::conjugate, d);
  if (token == "fourier") return basis<double>(BasisKind::fourier, d);
  if (token == "mub4") return basis<double>(BasisKind::mub4, d);
  throw UsageError("bad bases spec: unknown basis '" + token + "'");
}

PureState load_state_or_usage(const std::string& id) {
  try {
    return load_state(id);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_oracle(const std::string& state_id, const std::string& bases_spec, const std::string& eve_spec, bool marginals,
               bool as_json, std::ostream& out) {
  const auto state = load_state_or_usage(state_id);
  const auto tokens = split_list(bases_spec);
  if (tokens.size() != state.num_subsystems())
    throw UsageError("bad bases spec: " + std::to_string(tokens.size()) + " bases for " +
                     std::to_string(state.num_subsystems()) + " subsystems");
  BasisAssignment bases;
  for (std::size_t k = 0; k < tokens.size(); ++k) bases.push_back(parse_basis_token(tokens[k], state.dims()[k]));
  const auto eve = EveStrategy::parse(eve_spec);
  const auto targets = resolve_targets(eve, state.labels(), "");
  const auto table = eve.active() ? channel_distribution(state, targets, eve.basis, bases) : joint_distribution(state, bases);

  if (as_json) {
    json j;
    j["state"] = state_id;
    j["dims"] = state.dims();
    j["labels"] = state.labels();
    j["bases"] = tokens;
    j["eve"] = eve.to_string();
    j["outcomes"] = json::array();
    for (const auto& [t, p] : table.support())
      j["outcomes"].push_back({{"outcome", t}, {"probability", std::stod(format_probability(p))}});
    j["marginals"] = json::array();
    for (std::size_t k = 0; k < state.num_subsystems(); ++k) {
      std::vector<double> m;
      for (double p : table.marginal(k)) m.push_back(std::stod(format_probability(p)));
      j["marginals"].push_back({{"label", state.labels()[k]}, {"probabilities", m}});
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  for (const auto& [t, p] : table.support()) out << tuple_text(t) << ' ' << format_probability(p) << '\n';
  if (marginals)
    for (std::size_t k = 0; k < state.num_subsystems(); ++k) {
      const auto m = table.marginal(k);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 1e-12)
          out << "marginal " << state.labels()[k] << ' ' << i << ' ' << format_probability(m[i]) << '\n';
    }
  return 0;
}

// --- verify-tables ----------------------------------------------------------

int cmd_verify_tables(const std::vector<std::string>& ids, bool as_json, const std::string& out_dir,
                      std::ostream& out) {
  std::vector<TableId> tables;
  if (ids.empty()) tables = {TableId::T3, TableId::T4, TableId::T5};
  for (const auto& s : ids) {
    const auto id = parse_table_id(s);
    if (!id) throw UsageError("unknown table id '" + s + "'");
    tables.push_back(*id);
  }
  if (!out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw UsageError("cannot create output directory '" + out_dir + "': " + ec.message());
  }
  bool all_consistent = true;
  json reports = json::array();
  for (auto id : tables) {
    const auto report = verify_table(table_spec(id));
    all_consistent = all_consistent && report.consistent();
    const auto text = report_to_json(report);
    if (!out_dir.empty()) write_file(fs::path(out_dir) / ("table_" + std::string(to_string(id)) + ".json"), text + "\n");
    if (as_json) {
      reports.push_back(json::parse(text));
      continue;
    }
    out << to_string(id) << ": " << (report.consistent() ? "consistent" : "DISCREPANCY") << " (support "
        << (report.support_match ? "match" : "mismatch") << ", relations " << (report.relation_match ? "hold" : "fail")
        << ")\n";
    out << "  oracle support:";
    for (const auto& t : report.oracle_support) out << " (" << tuple_text(t) << ')';
    out << '\n';
    for (const auto& r : report.relations) out << "  relation " << r.name << ": " << (r.holds ? "holds" : "fails") << '\n';
    for (const auto& f : report.findings) out << "  - " << f << '\n';
  }
  if (as_json) out << reports.dump(2) << '\n';
  return all_consistent ? kAccept : kTableDiscrepancy;
}

// --- factorize --------------------------------------------------------------

std::string group_text(const std::vector<int>& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + "}";
}

int cmd_factorize(const std::string& state_id, double tolerance, bool as_json, std::ostream& out) {
  const auto state = load_state_or_usage(state_id);
  PureState mapped = state;
  try {
    mapped = decimal_to_binary_map(state);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto scan = reducibility_scan(mapped, tolerance);
  if (as_json) {
    json j;
    j["state"] = state_id;
    j["qubits"] = mapped.num_subsystems();
    j["labels"] = mapped.labels();
    j["tolerance"] = tolerance;
    j["cuts"] = json::array();
    for (const auto& c : scan.cuts)
      j["cuts"].push_back({{"groupA", c.cut.group_a},
                           {"groupB", c.cut.group_b},
                           {"ratio", c.ratio},
                           {"singularValues", c.singular_values},
                           {"product", c.is_product}});
    j["irreducible"] = scan.irreducible();
    j["minRatio"] = scan.min_ratio();
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "state " << state_id << ", " << mapped.num_subsystems() << " qubits (";
  for (std::size_t k = 0; k < mapped.num_subsystems(); ++k) out << (k ? " " : "") << mapped.labels()[k];
  out << ")\n";
  for (const auto& c : scan.cuts) {
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.3e", c.ratio);
    out << "  " << group_text(c.cut.group_a) << " | " << group_text(c.cut.group_b) << "  ratio " << ratio
        << (c.is_product ? "  product" : "") << '\n';
  }
  char min_ratio[32];
  std::snprintf(min_ratio, sizeof min_ratio, "%.6g", scan.min_ratio());
  out << (scan.irreducible() ? "irreducible" : "reducible") << ", min ratio " << min_ratio << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"layerq: layered quantum key distribution and secret sharing simulator", "layerq"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  RunFlags run;
  auto* run_cmd = app.add_subcommand("run", "simulate a protocol session");
  run_cmd->add_option("--protocol", run.protocol, "p1, p2, p3, p4, c-sskd or bd-ssskd");
  run_cmd->add_option("--rounds", run.rounds, "number of rounds");
  run_cmd->add_option("--seed", run.seed, "64-bit seed (default: $LAYERQ_SEED, else 0)");
  run_cmd->add_option("--eve", run.eve, "none or intercept-resend:<targets>:<basis>");
  run_cmd->add_option("--basis-prob", run.basis_prob, "computational-basis probability, one value or one per party");
  run_cmd->add_option("--check-fraction", run.check_fraction, "fraction of each sifted class used for checking");
  run_cmd->add_option("--threshold", run.threshold, "abort threshold on the check statistics");
  run_cmd->add_option("--min-samples", run.min_samples, "samples below which a combination is inconclusive");
  run_cmd->add_option("--config", run.config, "JSON config file; flags take precedence");
  run_cmd->add_option("--out", run.out, "output directory");
  run_cmd->add_option("--workers", run.workers, "worker threads");
  run_cmd->add_flag("--csv", run.csv, "also write summary.csv");

  std::string state_id, bases_spec, eve_spec = "none";
  bool marginals = false, oracle_json = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact outcome distribution of a state");
  oracle_cmd->add_option("--state", state_id, "eq1, eq3, eq6, eq8, bell, ghz3 or a state file")->required();
  oracle_cmd->add_option("--bases", bases_spec, "per-subsystem bases, e.g. comp,conj,comp")->required();
  oracle_cmd->add_option("--eve", eve_spec, "none or intercept-resend:<targets>:<basis>");
  oracle_cmd->add_flag("--marginals", marginals, "also print single-subsystem marginals");
  oracle_cmd->add_flag("--json", oracle_json, "JSON output");

  std::vector<std::string> table_ids;
  bool tables_json = false;
  std::string tables_out;
  auto* tables_cmd = app.add_subcommand("verify-tables", "check the correlation tables against the oracle");
  tables_cmd->add_option("--table", table_ids, "3, 4 or 5 (repeatable; default all)");
  tables_cmd->add_flag("--json", tables_json, "JSON reports");
  tables_cmd->add_option("--out", tables_out, "also write one report file per table here");

  std::string factor_state;
  double tolerance = kProductTolerance;
  bool factor_json = false;
  auto* factor_cmd = app.add_subcommand("factorize", "scan qubit bipartitions for product structure");
  factor_cmd->add_option("--state", factor_state, "state id or file")->required();
  factor_cmd->add_option("--tolerance", tolerance, "product threshold on sigma2/sigma1");
  factor_cmd->add_flag("--json", factor_json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run, out);
    if (oracle_cmd->parsed()) return cmd_oracle(state_id, bases_spec, eve_spec, marginals, oracle_json, out);
    if (tables_cmd->parsed()) return cmd_verify_tables(table_ids, tables_json, tables_out, out);
    if (factor_cmd->parsed()) return cmd_factorize(factor_state, tolerance, factor_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace layerq::cli
