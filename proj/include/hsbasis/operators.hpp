// Copyright 2026 The hsbasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HSBASIS_OPERATORS_HPP
#define HSBASIS_OPERATORS_HPP

#include <hsbasis/transforms.hpp>

#include <span>

namespace hsbasis {

/// Operator on C^d (x) C^d; matrix is d^2 x d^2 under BipartiteIndex.
struct TwoPartyOperator {
  std::size_t d;
  ComplexMatrix matrix;
};

/// Which tensor factor carries the dagger (or conjugate) in a diagonal
/// expansion sum_jk g_jk (x) g_jk^dagger.
enum class Placement { second, first };

/// SWAP = sum_jk |jk><kj|.
inline TwoPartyOperator swap_operator(std::size_t d) {
  detail::require_basis_dim(d, "swap_operator");
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix s = ComplexMatrix::Zero(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) s(j * n + k, k * n + j) = 1.0;
  }
  return {d, std::move(s)};
}

namespace detail {

template <typename Adjoin>
ComplexMatrix diagonal_tensor_sum(const MatrixBasis& b, std::span<const std::size_t> indices,
                                  Placement placement, Adjoin adjoin) {
  const auto n = static_cast<Eigen::Index>(b.dim() * b.dim());
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (std::size_t i : indices) {
    const ComplexMatrix& g = b[i];
    acc += placement == Placement::second ? tensor(g, adjoin(g)) : tensor(adjoin(g), g);
  }
  return acc;
}

inline std::vector<std::size_t> all_indices(const MatrixBasis& b) {
  std::vector<std::size_t> idx(b.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return idx;
}

inline ComplexMatrix dagger_of(const ComplexMatrix& g) { return g.adjoint(); }
inline ComplexMatrix conj_of(const ComplexMatrix& g) { return g.conjugate(); }

// Unchecked sums, also used by the identity catalogue on bases that may fail
// validation.
inline ComplexMatrix swap_sum(const MatrixBasis& b, Placement placement) {
  const auto idx = all_indices(b);
  return diagonal_tensor_sum(b, idx, placement, dagger_of) / static_cast<double>(b.dim());
}

inline ComplexMatrix bell_sum(const MatrixBasis& b, Placement placement) {
  const auto idx = all_indices(b);
  const double dd = static_cast<double>(b.dim());
  return diagonal_tensor_sum(b, idx, placement, conj_of) / (dd * dd);
}

}  // namespace detail

/// (1/d) sum_lm g_lm (x) g_lm^dagger, which equals SWAP for every orthogonal
/// basis.
inline TwoPartyOperator swap_expansion(const MatrixBasis& b,
                                       Placement placement = Placement::second) {
  detail::require_valid(b, "swap_expansion");
  return {b.dim(), detail::swap_sum(b, placement)};
}

/// Diagonal part of SWAP, sum_j |jj><jj|, from the diagonal subset of a basis
/// that splits into diagonal and off-diagonal elements.
inline TwoPartyOperator swap_diag_expansion(const MatrixBasis& b) {
  detail::require_valid(b, "swap_diag_expansion");
  const auto split = split_diag_offdiag(b);
  if (!split) throw PreconditionError("swap_diag_expansion: basis has no diagonal/off-diagonal split");
  const double inv_d = 1.0 / static_cast<double>(b.dim());
  return {b.dim(), inv_d * detail::diagonal_tensor_sum(b, split->diagonal, Placement::second,
                                                       detail::dagger_of)};
}

/// SWAP - SWAP_diag from the off-diagonal subset.
inline TwoPartyOperator swap_offdiag_expansion(const MatrixBasis& b) {
  detail::require_valid(b, "swap_offdiag_expansion");
  const auto split = split_diag_offdiag(b);
  if (!split) throw PreconditionError("swap_offdiag_expansion: basis has no diagonal/off-diagonal split");
  const double inv_d = 1.0 / static_cast<double>(b.dim());
  return {b.dim(), inv_d * detail::diagonal_tensor_sum(b, split->offdiagonal, Placement::second,
                                                       detail::dagger_of)};
}

/// |Phi+_d> = (1/sqrt d) sum_j |jj>.
inline ComplexVector bell_state(std::size_t d) {
  detail::require_basis_dim(d, "bell_state");
  const auto n = static_cast<Eigen::Index>(d);
  ComplexVector v = ComplexVector::Zero(n * n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index j = 0; j < n; ++j) v(j * n + j) = amp;
  return v;
}

inline TwoPartyOperator bell_projector(std::size_t d) {
  const ComplexVector v = bell_state(d);
  return {d, v * v.adjoint()};
}

/// (1/d^2) sum_jk g_jk (x) g_jk^*, the Bell projector in any basis.
inline TwoPartyOperator bell_expansion(const MatrixBasis& b,
                                       Placement placement = Placement::second) {
  detail::require_valid(b, "bell_expansion");
  return {b.dim(), detail::bell_sum(b, placement)};
}

/// Gell-Mann specific form: (1/d^2)[sum_{j<k} (x (x) x - y (x) y) + sum_j z (x) z]
/// with z_00 the identity. Conjugation only flips the sign of the y terms.
inline TwoPartyOperator bell_expansion_gellmann(std::size_t d) {
  const MatrixBasis gm = gellmann_basis(d);
  const auto n = static_cast<Eigen::Index>(d * d);
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      const ComplexMatrix& g = gm.at(j, k);
      // (j,k) with j > k holds y_kj
      acc += (j > k ? -1.0 : 1.0) * tensor(g, g);
    }
  }
  const double dd = static_cast<double>(d);
  return {d, acc / (dd * dd)};
}

/// |+>_d = (1/sqrt d) sum_j |j>.
inline ComplexVector coherent_state(std::size_t d) {
  detail::require_basis_dim(d, "coherent_state");
  const auto n = static_cast<Eigen::Index>(d);
  return ComplexVector::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(d))));
}

/// d^{3/2} |+><+| built as sum_lm c_lm g_lm where c_lm sums the inverse
/// standard-basis coefficients over all matrix units |j><k|.
inline ComplexMatrix coherent_expansion(const MatrixBasis& b) {
  detail::require_valid(b, "coherent_expansion");
  const std::size_t d = b.dim();
  const BasisChange inverse = from_standard(b);  // sqrt(d)|j><k| = sum_lm V_{jk,lm} g_lm
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  const Eigen::Matrix<Complex, 1, Eigen::Dynamic> coeffs = inverse.coeffs.colwise().sum();
  for (std::size_t i = 0; i < b.size(); ++i) acc += coeffs(static_cast<Eigen::Index>(i)) * b[i];
  return acc;
}

}  // namespace hsbasis

#endif  // HSBASIS_OPERATORS_HPP
