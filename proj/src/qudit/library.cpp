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

#include "layerq/qudit/library.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "layerq/qudit/measure.hpp"

namespace layerq {

std::vector<Term> controlled_resource_terms() {
  const auto u = basis(BasisKind::mub4, 4);
  std::vector<Term> terms;
  for (int j = 0; j < 4; ++j)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) terms.push_back({{a, j, b}, u.vectors(a, j) * u.vectors(b, j)});
  terms.push_back({{3, 3, 3}, {-2.0, 0.0}});
  return terms;
}

namespace states {

PureState layered_reducible() {
  return make_state({4, 4, 2}, {{{0, 0, 0}, 1}, {{2, 2, 0}, 1}, {{1, 1, 1}, 1}, {{3, 3, 1}, 1}}, {"A", "B1", "B2"});
}

PureState layered_irreducible() {
  return make_state({4, 4, 2}, {{{0, 0, 0}, 1}, {{2, 2, 0}, 1}, {{1, 1, 1}, 1}, {{3, 3, 1}, -1}}, {"A", "B1", "B2"});
}

PureState controlled_resource() { return make_state({4, 4, 4}, controlled_resource_terms(), {"A", "C", "B"}); }

PureState basis_dependent_resource() {
  return make_state({4, 4, 2}, {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}, {{2, 2, 0}, 1}, {{3, 3, 1}, -1}}, {"A", "B1", "B2"});
}

PureState bell() { return make_state({2, 2}, {{{0, 0}, 1}, {{1, 1}, 1}}, {"A", "B"}); }

PureState ghz3() { return make_state({2, 2, 2}, {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}}, {"A", "B1", "B2"}); }

}  // namespace states

const std::vector<std::string>& builtin_state_names() {
  static const std::vector<std::string> names{"eq1", "eq3", "eq6", "eq8", "bell", "ghz3"};
  return names;
}

std::optional<PureState> builtin_state(std::string_view name) {
  if (name == "eq1") return states::layered_reducible();
  if (name == "eq3") return states::layered_irreducible();
  if (name == "eq6") return states::controlled_resource();
  if (name == "eq8") return states::basis_dependent_resource();
  if (name == "bell") return states::bell();
  if (name == "ghz3") return states::ghz3();
  return std::nullopt;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, std::size_t line_no) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty())
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
  return v;
}

double parse_double(const std::string& tok, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty())
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected number, got '" + tok + "'");
  return v;
}

}  // namespace

PureState parse_state_text(std::string_view text) {
  Dims dims;
  Labels labels;
  std::vector<Term> terms;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "dims") {
      dims.clear();
      for (std::size_t i = 1; i < toks.size(); ++i) dims.push_back(parse_int(toks[i], line_no));
      continue;
    }
    if (toks[0] == "labels") {
      labels.assign(toks.begin() + 1, toks.end());
      continue;
    }
    if (dims.empty()) throw std::invalid_argument("line " + std::to_string(line_no) + ": term before 'dims' line");
    if (toks.size() != 3)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 'index-tuple amplitude_re amplitude_im'");
    std::string tuple = toks[0];
    std::erase_if(tuple, [](char c) { return c == '(' || c == ')'; });
    std::replace(tuple.begin(), tuple.end(), ',', ' ');
    IndexTuple index;
    for (const auto& t : split_ws(tuple)) index.push_back(parse_int(t, line_no));
    terms.push_back({std::move(index), {parse_double(toks[1], line_no), parse_double(toks[2], line_no)}});
  }
  if (dims.empty()) throw std::invalid_argument("state text has no 'dims' line");
  return make_state(dims, terms, labels);
}

std::string format_state_text(const PureState& s) {
  std::ostringstream out;
  out << "dims";
  for (int d : s.dims()) out << ' ' << d;
  out << "\nlabels";
  for (const auto& l : s.labels()) out << ' ' << l;
  out << '\n' << std::setprecision(17);
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const auto a = s.amplitudes()(i);
    if (a == std::complex<double>(0)) continue;
    const auto idx = unflatten(s.dims(), static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < idx.size(); ++k) out << (k ? "," : "") << idx[k];
    out << ' ' << a.real() << ' ' << a.imag() << '\n';
  }
  return out.str();
}

PureState load_state(const std::string& id_or_path) {
  if (auto s = builtin_state(id_or_path)) return *s;
  std::ifstream f(id_or_path);
  if (!f) throw std::invalid_argument("unknown state '" + id_or_path + "' (not a builtin and not a readable file)");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_state_text(buf.str());
}

}  // namespace layerq
