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

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace layerq {

enum class BasisKind { computational, fourier, mub4 };

inline std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::computational: return "computational";
    case BasisKind::fourier: return "fourier";
    case BasisKind::mub4: return "mub4";
  }
  return "?";
}

/// Orthonormal measurement basis of one subsystem. Column i of `vectors`
/// is basis vector i in computational coordinates.
template <typename Real>
struct BasisSetT {
  using Scalar = std::complex<Real>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  int dim = 0;
  Matrix vectors;
  BasisKind kind = BasisKind::computational;

  auto vector(int i) const { return vectors.col(i); }

  /// Largest entry of |V^H V - I|.
  Real orthonormality_error() const {
    return (vectors.adjoint() * vectors - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  }
};

using BasisSet = BasisSetT<double>;

/// computational(d), fourier(d) with omega = exp(2 pi i / d), or the real
/// d = 4 basis u_0..u_3 (u_j = |+-> products under |0>=|00> .. |3>=|11>).
template <typename Real = double>
BasisSetT<Real> basis(BasisKind kind, int d) {
  using Matrix = typename BasisSetT<Real>::Matrix;
  using Scalar = typename BasisSetT<Real>::Scalar;
  if (d < 1) throw std::invalid_argument("basis dimension must be positive, got " + std::to_string(d));
  BasisSetT<Real> b;
  b.dim = d;
  b.kind = kind;
  switch (kind) {
    case BasisKind::computational:
      b.vectors = Matrix::Identity(d, d);
      break;
    case BasisKind::fourier: {
      b.vectors.resize(d, d);
      const Real scale = Real(1) / std::sqrt(Real(d));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          // reduce i*j mod d first so the phase stays exact for large products
          const Real phase = Real(2) * std::numbers::pi_v<Real> * Real((i * j) % d) / Real(d);
          b.vectors(j, i) = std::polar(scale, phase);
        }
      break;
    }
    case BasisKind::mub4: {
      if (d != 4) throw std::invalid_argument("mub4 basis requires d = 4, got " + std::to_string(d));
      static constexpr int signs[4][4] = {
          {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
      b.vectors.resize(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b.vectors(j, i) = Scalar(Real(signs[i][j]) / Real(2), Real(0));
      break;
    }
  }
  return b;
}

/// The basis the protocols call "conjugate": mub4 for ququarts, Fourier otherwise.
template <typename Real = double>
BasisSetT<Real> conjugate_basis(int d) {
  return d == 4 ? basis<Real>(BasisKind::mub4, 4) : basis<Real>(BasisKind::fourier, d);
}

/// A party's announced basis choice. `none` marks a slot with no
/// measurement (Charlie during a decoy round).
enum class BasisChoice { computational, conjugate, none };

inline std::string_view to_string(BasisChoice c) {
  switch (c) {
    case BasisChoice::computational: return "comp";
    case BasisChoice::conjugate: return "conj";
    case BasisChoice::none: return "none";
  }
  return "?";
}

template <typename Real = double>
BasisSetT<Real> basis_for(BasisChoice c, int d) {
  return c == BasisChoice::conjugate ? conjugate_basis<Real>(d) : basis<Real>(BasisKind::computational, d);
}

/// Maximum over (i, j) of | |<e_i|f_j>|^2 - 1/d |. Zero for mutually unbiased bases.
template <typename Real>
Real mutual_unbiasedness(const BasisSetT<Real>& b1, const BasisSetT<Real>& b2) {
  if (b1.dim != b2.dim)
    throw std::invalid_argument("basis dimension mismatch: " + std::to_string(b1.dim) + " vs " +
                                std::to_string(b2.dim));
  const auto overlaps = (b1.vectors.adjoint() * b2.vectors).cwiseAbs2();
  return (overlaps.array() - Real(1) / Real(b1.dim)).abs().maxCoeff();
}

}  // namespace layerq
