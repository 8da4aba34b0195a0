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

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "layerq/qudit/state.hpp"

namespace layerq {

/// Two disjoint, nonempty groups of subsystem indices that together cover
/// every subsystem of a state.
struct Bipartition {
  std::vector<int> group_a;
  std::vector<int> group_b;

  /// Throws std::invalid_argument unless the groups partition 0..n-1.
  void validate(std::size_t n) const {
    if (group_a.empty() || group_b.empty()) throw std::invalid_argument("invalid partition: empty group");
    std::vector<int> seen(n, 0);
    for (const auto* g : {&group_a, &group_b})
      for (int q : *g) {
        if (q < 0 || static_cast<std::size_t>(q) >= n)
          throw std::invalid_argument("invalid partition: index " + std::to_string(q) + " out of range");
        if (seen[static_cast<std::size_t>(q)]++)
          throw std::invalid_argument("invalid partition: index " + std::to_string(q) + " repeated");
      }
    if (std::count(seen.begin(), seen.end(), 0) != 0)
      throw std::invalid_argument("invalid partition: groups do not cover every subsystem");
  }
};

inline constexpr double kProductTolerance = 1e-10;

template <typename Real>
struct FactorizationResultT {
  Bipartition cut;
  std::vector<Real> singular_values;  // descending
  Real ratio = 0;                     // sigma_2 / sigma_1, 0 for rank one
  bool is_product = false;
};

using FactorizationResult = FactorizationResultT<double>;

/// Schmidt test across a cut: reshape the amplitudes into a
/// (group A) x (group B) matrix and compare its two leading singular values.
template <typename Real>
FactorizationResultT<Real> product_test(const PureStateT<Real>& s, const Bipartition& cut,
                                        Real tolerance = Real(kProductTolerance)) {
  cut.validate(s.num_subsystems());
  std::vector<int> order = cut.group_a;
  order.insert(order.end(), cut.group_b.begin(), cut.group_b.end());
  const auto permuted = permute_subsystems(s, order);

  Eigen::Index rows = 1;
  for (int q : cut.group_a) rows *= s.dims()[static_cast<std::size_t>(q)];
  const Eigen::Index cols = s.size() / rows;
  using Matrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Matrix m = Eigen::Map<const Matrix>(permuted.amplitudes().data(), rows, cols);
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();

  FactorizationResultT<Real> result;
  result.cut = cut;
  result.singular_values.assign(sv.data(), sv.data() + sv.size());
  if (sv.size() > 1 && sv(0) > Real(0)) result.ratio = sv(1) / sv(0);
  result.is_product = result.ratio <= tolerance;
  return result;
}

template <typename Real>
struct ReducibilityScanT {
  std::vector<FactorizationResultT<Real>> cuts;

  bool irreducible() const {
    return std::none_of(cuts.begin(), cuts.end(), [](const auto& c) { return c.is_product; });
  }

  Real min_ratio() const {
    Real m = std::numeric_limits<Real>::infinity();
    for (const auto& c : cuts) m = std::min(m, c.ratio);
    return m;
  }
};

using ReducibilityScan = ReducibilityScanT<double>;

/// Runs product_test over every bipartition of the subsystems
/// (2^(n-1) - 1 cuts; subsystem 0 is always in group A).
template <typename Real>
ReducibilityScanT<Real> reducibility_scan(const PureStateT<Real>& s, Real tolerance = Real(kProductTolerance)) {
  const std::size_t n = s.num_subsystems();
  if (n > 20) throw std::invalid_argument("reducibility scan limited to 20 subsystems");
  ReducibilityScanT<Real> scan;
  if (n < 2) return scan;
  const std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t mask = 1; mask < full; mask += 2) {
    Bipartition cut;
    for (std::size_t q = 0; q < n; ++q) (mask >> q & 1u ? cut.group_a : cut.group_b).push_back(static_cast<int>(q));
    scan.cuts.push_back(product_test(s, cut, tolerance));
  }
  return scan;
}

}  // namespace layerq
