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

#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace layerq {

/// Local dimension of each subsystem, in party order.
using Dims = std::vector<int>;
/// Party label of each subsystem ("A", "B1", ...). May repeat.
using Labels = std::vector<std::string>;
/// One local index per subsystem.
using IndexTuple = std::vector<int>;

/// Thrown when a projection lands on a branch of zero probability.
class ZeroProbabilityBranch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t total_dimension(const Dims& dims) {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

/// Row-major flat index: the first subsystem is the most significant digit.
inline std::size_t flat_index(const Dims& dims, std::span<const int> tuple) {
  if (tuple.size() != dims.size())
    throw std::invalid_argument("index tuple has " + std::to_string(tuple.size()) +
                                " entries, state has " + std::to_string(dims.size()) +
                                " subsystems");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (tuple[k] < 0 || tuple[k] >= dims[k])
      throw std::out_of_range("index " + std::to_string(tuple[k]) + " out of range for subsystem " +
                              std::to_string(k) + " of dimension " + std::to_string(dims[k]));
    flat = flat * static_cast<std::size_t>(dims[k]) + static_cast<std::size_t>(tuple[k]);
  }
  return flat;
}

inline IndexTuple unflatten(const Dims& dims, std::size_t flat) {
  IndexTuple tuple(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    tuple[k] = static_cast<int>(flat % static_cast<std::size_t>(dims[k]));
    flat /= static_cast<std::size_t>(dims[k]);
  }
  return tuple;
}

inline void validate_dims(const Dims& dims) {
  if (dims.empty()) throw std::invalid_argument("state needs at least one subsystem");
  for (int d : dims)
    if (d < 1) throw std::invalid_argument("local dimension must be positive, got " + std::to_string(d));
}

/// Complex amplitude vector over a tensor product of qudits.
///
/// Amplitudes are stored row-major over `dims` (first subsystem most
/// significant). Construction does not normalize; use make_state or
/// normalized() for that.
template <typename Real>
class PureStateT {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  PureStateT(Dims dims, Vector amps, Labels labels = {})
      : dims_(std::move(dims)), amps_(std::move(amps)), labels_(std::move(labels)) {
    validate_dims(dims_);
    if (static_cast<std::size_t>(amps_.size()) != total_dimension(dims_))
      throw std::invalid_argument("amplitude vector length " + std::to_string(amps_.size()) +
                                  " does not match product of dims " +
                                  std::to_string(total_dimension(dims_)));
    if (labels_.empty()) {
      labels_.reserve(dims_.size());
      for (std::size_t k = 0; k < dims_.size(); ++k) labels_.push_back("q" + std::to_string(k));
    } else if (labels_.size() != dims_.size()) {
      throw std::invalid_argument("label count does not match subsystem count");
    }
  }

  const Dims& dims() const { return dims_; }
  const Labels& labels() const { return labels_; }
  const Vector& amplitudes() const { return amps_; }
  std::size_t num_subsystems() const { return dims_.size(); }
  Eigen::Index size() const { return amps_.size(); }

  Scalar amplitude(std::span<const int> tuple) const {
    return amps_(static_cast<Eigen::Index>(flat_index(dims_, tuple)));
  }
  Real norm() const { return amps_.norm(); }

  PureStateT normalized() const {
    const Real n = norm();
    if (n == Real(0)) throw std::invalid_argument("cannot normalize the zero vector");
    return PureStateT(dims_, amps_ / n, labels_);
  }

  PureStateT with_labels(Labels labels) const { return PureStateT(dims_, amps_, std::move(labels)); }

 private:
  Dims dims_;
  Vector amps_;
  Labels labels_;
};

using PureState = PureStateT<double>;

template <typename Real>
struct TermT {
  IndexTuple index;
  std::complex<Real> amplitude;
};
using Term = TermT<double>;

/// Sums the given terms into an (unnormalized) amplitude vector.
template <typename Real>
typename PureStateT<Real>::Vector amplitude_vector(const Dims& dims,
                                                   const std::vector<TermT<Real>>& terms) {
  validate_dims(dims);
  typename PureStateT<Real>::Vector amps =
      PureStateT<Real>::Vector::Zero(static_cast<Eigen::Index>(total_dimension(dims)));
  for (const auto& t : terms) amps(static_cast<Eigen::Index>(flat_index(dims, t.index))) += t.amplitude;
  return amps;
}

/// Builds a normalized state from (index tuple, amplitude) terms.
/// Repeated indices accumulate.
template <typename Real = double>
PureStateT<Real> make_state(const Dims& dims, const std::vector<TermT<Real>>& terms,
                            Labels labels = {}) {
  auto amps = amplitude_vector(dims, terms);
  const Real n = amps.norm();
  if (n == Real(0)) throw std::invalid_argument("all amplitudes are zero");
  return PureStateT<Real>(dims, amps / n, std::move(labels));
}

/// Computational basis state |index>.
template <typename Real = double>
PureStateT<Real> basis_state(const Dims& dims, const IndexTuple& index, Labels labels = {}) {
  return make_state<Real>(dims, {TermT<Real>{index, {Real(1), Real(0)}}}, std::move(labels));
}

template <typename Real>
PureStateT<Real> tensor_product(const PureStateT<Real>& a, const PureStateT<Real>& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  Labels labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  const Eigen::Index nb = b.size();
  typename PureStateT<Real>::Vector amps(a.size() * nb);
  for (Eigen::Index i = 0; i < a.size(); ++i) amps.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
  return PureStateT<Real>(std::move(dims), std::move(amps), std::move(labels));
}

/// Reorders subsystems: subsystem k of the result is subsystem order[k] of s.
template <typename Real>
PureStateT<Real> permute_subsystems(const PureStateT<Real>& s, const std::vector<int>& order) {
  const std::size_t n = s.num_subsystems();
  if (order.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n, false);
  Dims dims(n);
  Labels labels(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int src = order[k];
    if (src < 0 || static_cast<std::size_t>(src) >= n || seen[static_cast<std::size_t>(src)])
      throw std::invalid_argument("invalid subsystem permutation");
    seen[static_cast<std::size_t>(src)] = true;
    dims[k] = s.dims()[static_cast<std::size_t>(src)];
    labels[k] = s.labels()[static_cast<std::size_t>(src)];
  }
  typename PureStateT<Real>::Vector amps(s.size());
  IndexTuple old_index(n);
  for (std::size_t flat = 0; flat < static_cast<std::size_t>(s.size()); ++flat) {
    const IndexTuple idx = unflatten(dims, flat);
    for (std::size_t k = 0; k < n; ++k) old_index[static_cast<std::size_t>(order[k])] = idx[k];
    amps(static_cast<Eigen::Index>(flat)) = s.amplitudes()(static_cast<Eigen::Index>(flat_index(s.dims(), old_index)));
  }
  return PureStateT<Real>(std::move(dims), std::move(amps), std::move(labels));
}

inline bool is_power_of_two(int d) { return d >= 2 && (d & (d - 1)) == 0; }

/// Splits every d = 2^k subsystem into k qubits, most significant bit first
/// (|0> -> |00>, |1> -> |01>, |2> -> |10>, |3> -> |11> for d = 4).
///
/// With row-major storage and MSB-first splitting the flat index of every
/// amplitude is unchanged, so only dims and labels are rewritten.
template <typename Real>
PureStateT<Real> decimal_to_binary_map(const PureStateT<Real>& s) {
  Dims dims;
  Labels labels;
  for (std::size_t k = 0; k < s.num_subsystems(); ++k) {
    const int d = s.dims()[k];
    if (!is_power_of_two(d))
      throw std::invalid_argument("subsystem " + std::to_string(k) + " has dimension " + std::to_string(d) +
                                  ", which is not a power of 2");
    for (int bits = d; bits > 1; bits >>= 1) {
      dims.push_back(2);
      labels.push_back(s.labels()[k]);
    }
  }
  return PureStateT<Real>(std::move(dims), s.amplitudes(), std::move(labels));
}

template <typename Real>
std::complex<Real> inner_product(const PureStateT<Real>& a, const PureStateT<Real>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product of states of different size");
  return a.amplitudes().dot(b.amplitudes());
}

}  // namespace layerq
