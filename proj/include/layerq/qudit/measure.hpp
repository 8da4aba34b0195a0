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
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "layerq/qudit/basis.hpp"
#include "layerq/qudit/random.hpp"
#include "layerq/qudit/state.hpp"

namespace layerq {

template <typename Real>
using BasisAssignmentT = std::vector<BasisSetT<Real>>;
using BasisAssignment = BasisAssignmentT<double>;

template <typename Real>
void check_bases(const Dims& dims, const BasisAssignmentT<Real>& bases) {
  if (bases.size() != dims.size())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(bases.size()) + " bases for " +
                                std::to_string(dims.size()) + " subsystems");
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (bases[k].dim != dims[k])
      throw std::invalid_argument("dimension mismatch at subsystem " + std::to_string(k) + ": basis dim " +
                                  std::to_string(bases[k].dim) + ", subsystem dim " + std::to_string(dims[k]));
}

/// Applies `op` (rows x d_k) to subsystem k of a row-major tensor. The
/// result has d_k replaced by op.rows().
template <typename Real, typename Derived>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> apply_local(
    const Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>& v, const Dims& dims, std::size_t k,
    const Eigen::MatrixBase<Derived>& op) {
  Eigen::Index outer = 1, inner = 1;
  for (std::size_t j = 0; j < k; ++j) outer *= dims[j];
  for (std::size_t j = k + 1; j < dims.size(); ++j) inner *= dims[j];
  const Eigen::Index d = dims[k];
  const Eigen::Index rows = op.rows();
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> out =
      Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>::Zero(outer * rows * inner);
  for (Eigen::Index o = 0; o < outer; ++o)
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index i = 0; i < d; ++i) {
        const std::complex<Real> m = op(r, i);
        if (m == std::complex<Real>(0)) continue;
        out.segment((o * rows + r) * inner, inner) += m * v.segment((o * d + i) * inner, inner);
      }
  return out;
}

/// Born probabilities over flat outcome indices, by contracting each
/// subsystem with its basis adjoint. This is the sampling path.
template <typename Real>
std::vector<Real> born_probabilities(const PureStateT<Real>& s, const BasisAssignmentT<Real>& bases) {
  check_bases(s.dims(), bases);
  auto v = s.amplitudes();
  for (std::size_t k = 0; k < bases.size(); ++k) {
    if (bases[k].kind == BasisKind::computational) continue;
    v = apply_local<Real>(v, s.dims(), k, bases[k].vectors.adjoint());
  }
  std::vector<Real> p(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) p[static_cast<std::size_t>(i)] = std::norm(v(i));
  return p;
}

/// Exact joint outcome probabilities for a state measured in a product basis.
template <typename Real>
struct DistributionTableT {
  BasisAssignmentT<Real> bases;
  Dims dims;
  std::vector<Real> probabilities;  // flat, row-major over dims

  Real probability(std::span<const int> outcome) const { return probabilities[flat_index(dims, outcome)]; }

  Real total() const {
    Real t = 0;
    for (Real p : probabilities) t += p;
    return t;
  }

  /// Outcomes with probability above `tol`, in flat order.
  std::vector<std::pair<IndexTuple, Real>> support(Real tol = Real(1e-12)) const {
    std::vector<std::pair<IndexTuple, Real>> out;
    for (std::size_t i = 0; i < probabilities.size(); ++i)
      if (probabilities[i] > tol) out.emplace_back(unflatten(dims, i), probabilities[i]);
    return out;
  }

  std::vector<Real> marginal(std::size_t subsystem) const {
    std::vector<Real> m(static_cast<std::size_t>(dims.at(subsystem)), Real(0));
    for (std::size_t i = 0; i < probabilities.size(); ++i)
      m[static_cast<std::size_t>(unflatten(dims, i)[subsystem])] += probabilities[i];
    return m;
  }
};

using DistributionTable = DistributionTableT<double>;

/// Exact oracle: p(o) = |<e_o1 (x) e_o2 (x) ... | psi>|^2 with the full
/// product basis built by Kronecker products. Independent of the
/// contraction path used by measure().
template <typename Real>
DistributionTableT<Real> joint_distribution(const PureStateT<Real>& s, const BasisAssignmentT<Real>& bases) {
  check_bases(s.dims(), bases);
  using Matrix = typename BasisSetT<Real>::Matrix;
  Matrix product = bases[0].vectors;
  for (std::size_t k = 1; k < bases.size(); ++k) {
    Matrix next = Eigen::kroneckerProduct(product, bases[k].vectors).eval();
    product = std::move(next);
  }
  const auto amps = (product.adjoint() * s.amplitudes()).eval();
  DistributionTableT<Real> table{bases, s.dims(), std::vector<Real>(static_cast<std::size_t>(amps.size()))};
  for (Eigen::Index i = 0; i < amps.size(); ++i) table.probabilities[static_cast<std::size_t>(i)] = std::norm(amps(i));
  return table;
}

/// Precomputed inverse-CDF sampler for repeated draws from one state and
/// basis assignment.
template <typename Real>
class SamplerT {
 public:
  SamplerT(const PureStateT<Real>& s, const BasisAssignmentT<Real>& bases)
      : dims_(s.dims()), cdf_(born_probabilities(s, bases)) {
    Real acc = 0;
    for (auto& p : cdf_) {
      acc += p;
      p = acc;
    }
    for (auto& c : cdf_) c /= acc;
  }

  std::size_t sample_flat(Rng& rng) const {
    const Real u = static_cast<Real>(uniform01(rng));
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return static_cast<std::size_t>(it - cdf_.begin());
  }

  IndexTuple sample(Rng& rng) const { return unflatten(dims_, sample_flat(rng)); }
  const Dims& dims() const { return dims_; }

 private:
  Dims dims_;
  std::vector<Real> cdf_;
};

using Sampler = SamplerT<double>;

/// Product of the chosen basis vectors, one per subsystem.
template <typename Real>
PureStateT<Real> product_basis_state(const BasisAssignmentT<Real>& bases, const IndexTuple& outcome,
                                     Labels labels = {}) {
  Dims dims;
  typename PureStateT<Real>::Vector amps = PureStateT<Real>::Vector::Ones(1);
  for (std::size_t k = 0; k < bases.size(); ++k) {
    dims.push_back(bases[k].dim);
    const auto e = bases[k].vector(outcome[k]);
    typename PureStateT<Real>::Vector next(amps.size() * e.size());
    for (Eigen::Index i = 0; i < amps.size(); ++i) next.segment(i * e.size(), e.size()) = amps(i) * e;
    amps = std::move(next);
  }
  return PureStateT<Real>(std::move(dims), std::move(amps), std::move(labels));
}

template <typename Real>
struct MeasurementT {
  IndexTuple outcome;
  PureStateT<Real> collapsed;
};

/// Samples one outcome by the Born rule and collapses onto the matching
/// product basis vector.
template <typename Real>
MeasurementT<Real> measure(const PureStateT<Real>& s, const BasisAssignmentT<Real>& bases, Rng& rng) {
  const auto p = born_probabilities(s, bases);
  const std::size_t flat = sample_weights<Real>(rng, p);
  IndexTuple outcome = unflatten(s.dims(), flat);
  auto collapsed = product_basis_state(bases, outcome, s.labels());
  return {std::move(outcome), std::move(collapsed)};
}

template <typename Real>
struct ProjectionT {
  Real probability;
  PureStateT<Real> collapsed;  ///< full state, subsystem replaced by the basis vector
  PureStateT<Real> remainder;  ///< state of the other subsystems
};

/// Projects one subsystem onto basis vector `outcome`.
template <typename Real>
ProjectionT<Real> project_subsystem(const PureStateT<Real>& s, std::size_t subsystem, const BasisSetT<Real>& b,
                                    int outcome, Real zero_tol = Real(1e-15)) {
  if (subsystem >= s.num_subsystems())
    throw std::invalid_argument("subsystem " + std::to_string(subsystem) + " out of range");
  if (b.dim != s.dims()[subsystem])
    throw std::invalid_argument("dimension mismatch: basis dim " + std::to_string(b.dim) + ", subsystem dim " +
                                std::to_string(s.dims()[subsystem]));
  if (outcome < 0 || outcome >= b.dim)
    throw std::out_of_range("outcome " + std::to_string(outcome) + " out of range for basis of dimension " +
                            std::to_string(b.dim));
  const auto e = b.vector(outcome);
  auto branch = apply_local<Real>(s.amplitudes(), s.dims(), subsystem, e.adjoint());
  const Real p = branch.squaredNorm();
  if (p < zero_tol)
    throw ZeroProbabilityBranch("projection of subsystem " + std::to_string(subsystem) + " onto outcome " +
                                std::to_string(outcome) + " has zero probability");
  branch /= std::sqrt(p);

  Dims rest_dims;
  Labels rest_labels;
  for (std::size_t k = 0; k < s.num_subsystems(); ++k)
    if (k != subsystem) {
      rest_dims.push_back(s.dims()[k]);
      rest_labels.push_back(s.labels()[k]);
    }
  if (rest_dims.empty()) {
    rest_dims.push_back(1);
    rest_labels.push_back("-");
  }

  Eigen::Index outer = 1, inner = 1;
  for (std::size_t j = 0; j < subsystem; ++j) outer *= s.dims()[j];
  for (std::size_t j = subsystem + 1; j < s.num_subsystems(); ++j) inner *= s.dims()[j];
  const Eigen::Index d = s.dims()[subsystem];
  typename PureStateT<Real>::Vector full(s.size());
  for (Eigen::Index o = 0; o < outer; ++o)
    for (Eigen::Index i = 0; i < d; ++i) full.segment((o * d + i) * inner, inner) = e(i) * branch.segment(o * inner, inner);

  return {p, PureStateT<Real>(s.dims(), std::move(full), s.labels()),
          PureStateT<Real>(std::move(rest_dims), std::move(branch), std::move(rest_labels))};
}

/// Total-variation distance between two distributions over the same outcomes.
template <typename Real>
Real total_variation(const std::vector<Real>& p, const std::vector<Real>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("total variation of distributions of different size");
  Real tv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - q[i]);
  return tv / Real(2);
}

}  // namespace layerq
