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

#ifndef HSBASIS_MAPS_HPP
#define HSBASIS_MAPS_HPP

#include <hsbasis/operators.hpp>

#include <functional>

namespace hsbasis {

// ---------------------------------------------------------------------------
// Bloch representation
// ---------------------------------------------------------------------------

/// Coefficients b_jk = Tr(g_jk^dagger A) in flat (j, k) order.
struct BlochVector {
  std::size_t d;
  BasisKind kind;
  ComplexVector coeffs;
};

namespace detail {

inline void require_operator(const ComplexMatrix& a, std::size_t d, const char* what) {
  const auto n = static_cast<Eigen::Index>(d);
  if (a.rows() != n || a.cols() != n) {
    throw DimensionError(std::string(what) + ": expected a " + std::to_string(d) + "x" +
                         std::to_string(d) + " operator, got " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()));
  }
}

}  // namespace detail

inline BlochVector bloch_decompose(const ComplexMatrix& a, const MatrixBasis& b) {
  detail::require_operator(a, b.dim(), "bloch_decompose");
  ComplexVector coeffs(static_cast<Eigen::Index>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) coeffs(static_cast<Eigen::Index>(i)) = hs_inner(b[i], a);
  return {b.dim(), b.kind(), std::move(coeffs)};
}

/// A = (1/d) sum_jk b_jk g_jk.
inline ComplexMatrix bloch_reconstruct(const BlochVector& v, const MatrixBasis& b) {
  if (v.d != b.dim() || static_cast<std::size_t>(v.coeffs.size()) != b.size()) {
    throw DimensionError("bloch_reconstruct: coefficient count does not match basis");
  }
  const auto n = static_cast<Eigen::Index>(b.dim());
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < b.size(); ++i) a += v.coeffs(static_cast<Eigen::Index>(i)) * b[i];
  return a / static_cast<double>(b.dim());
}

// ---------------------------------------------------------------------------
// Single-party map expansions
// ---------------------------------------------------------------------------

/// (1/d) sum_lm g_lm A g_lm^dagger = Tr(A) 1.
inline ComplexMatrix trace_map_apply(const ComplexMatrix& a, const MatrixBasis& b) {
  detail::require_operator(a, b.dim(), "trace_map_apply");
  ComplexMatrix acc = ComplexMatrix::Zero(a.rows(), a.cols());
  for (const auto& g : b) acc.noalias() += g * a * g.adjoint();
  return acc / static_cast<double>(b.dim());
}

/// (1/d^2) sum_{jk,lm} g_jk g_lm^dagger A g_jk^dagger g_lm = A.
inline ComplexMatrix identity_map_apply(const ComplexMatrix& a, const MatrixBasis& b) {
  detail::require_operator(a, b.dim(), "identity_map_apply");
  ComplexMatrix acc = ComplexMatrix::Zero(a.rows(), a.cols());
  for (const auto& h : b) {
    const ComplexMatrix left = h.adjoint() * a;
    for (const auto& g : b) acc.noalias() += g * left * g.adjoint() * h;
  }
  const double dd = static_cast<double>(b.dim());
  return acc / (dd * dd);
}

/// The inner (j, k) sum of identity_map_apply read as a trace: the Bloch
/// reconstruction (1/d) sum_lm Tr(g_lm^dagger A) g_lm.
inline ComplexMatrix identity_map_via_bloch(const ComplexMatrix& a, const MatrixBasis& b) {
  return bloch_reconstruct(bloch_decompose(a, b), b);
}

/// (1/d) sum_lm g_lm A g_lm^* = A^T.
inline ComplexMatrix transpose_map_apply(const ComplexMatrix& a, const MatrixBasis& b) {
  detail::require_operator(a, b.dim(), "transpose_map_apply");
  ComplexMatrix acc = ComplexMatrix::Zero(a.rows(), a.cols());
  for (const auto& g : b) acc.noalias() += g * a * g.conjugate();
  return acc / static_cast<double>(b.dim());
}

// ---------------------------------------------------------------------------
// Two-party map expansions
// ---------------------------------------------------------------------------

/// Partial transpose on one party as (1/d) sum (1 (x) g) B (1 (x) g^*), or the
/// mirrored form for the first party.
inline TwoPartyOperator partial_transpose_map(const TwoPartyOperator& op, Party party,
                                              const MatrixBasis& b) {
  const std::size_t d = b.dim();
  if (op.d != d) throw DimensionError("partial_transpose_map: operator and basis dimensions differ");
  detail::require_bipartite(op.matrix, d, "partial_transpose_map");
  const ComplexMatrix one = identity(d);
  ComplexMatrix acc = ComplexMatrix::Zero(op.matrix.rows(), op.matrix.cols());
  for (const auto& g : b) {
    if (party == Party::second) {
      acc.noalias() += tensor(one, g) * op.matrix * tensor(one, g.conjugate());
    } else {
      acc.noalias() += tensor(g, one) * op.matrix * tensor(g.conjugate(), one);
    }
  }
  return {d, acc / static_cast<double>(d)};
}

/// Reshuffling as (1/d) sum (1 (x) g) B (g^* (x) 1).
inline TwoPartyOperator reshuffle_map(const TwoPartyOperator& op, const MatrixBasis& b) {
  const std::size_t d = b.dim();
  if (op.d != d) throw DimensionError("reshuffle_map: operator and basis dimensions differ");
  detail::require_bipartite(op.matrix, d, "reshuffle_map");
  const ComplexMatrix one = identity(d);
  ComplexMatrix acc = ComplexMatrix::Zero(op.matrix.rows(), op.matrix.cols());
  for (const auto& g : b) acc.noalias() += tensor(one, g) * op.matrix * tensor(g.conjugate(), one);
  return {d, acc / static_cast<double>(d)};
}

// ---------------------------------------------------------------------------
// Superoperators and the Choi representation
// ---------------------------------------------------------------------------

using MatrixAction = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Linear map on d x d matrices acting on vectorize(A). Column r of matrix is
/// vectorize(L(devectorize(e_r))).
struct Superoperator {
  std::size_t d;
  ComplexMatrix matrix;

  [[nodiscard]] ComplexMatrix apply(const ComplexMatrix& a) const {
    detail::require_operator(a, d, "Superoperator::apply");
    return devectorize(matrix * vectorize(a));
  }
};

/// Builds L from its action on the basis elements:
/// L(A) = (1/d) sum_jk Tr(g_jk^dagger A) L(g_jk).
inline Superoperator superop_from_action(const MatrixAction& action, const MatrixBasis& b) {
  const std::size_t d = b.dim();
  const auto n = static_cast<Eigen::Index>(d * d);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (const auto& g : b) {
    const ComplexMatrix image = action(g);
    detail::require_operator(image, d, "superop_from_action");
    m.noalias() += vectorize(image) * vectorize(g).adjoint();
  }
  return {d, m / static_cast<double>(d)};
}

struct ChoiState {
  std::size_t d;
  ComplexMatrix matrix;
};

/// C_L = (1/d^2) sum_jk L(g_jk) (x) g_jk^*.
inline ChoiState choi_state(const Superoperator& map, const MatrixBasis& b) {
  if (map.d != b.dim()) throw DimensionError("choi_state: map and basis dimensions differ");
  const std::size_t d = b.dim();
  const auto n = static_cast<Eigen::Index>(d * d);
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  for (const auto& g : b) c += tensor(map.apply(g), ComplexMatrix(g.conjugate()));
  const double dd = static_cast<double>(d);
  return {d, c / (dd * dd)};
}

/// L(A) = d Tr_2[C_L (1 (x) A^T)].
inline ComplexMatrix apply_via_choi(const ChoiState& choi, const ComplexMatrix& a) {
  detail::require_bipartite(choi.matrix, choi.d, "apply_via_choi");
  detail::require_operator(a, choi.d, "apply_via_choi");
  const ComplexMatrix prod = choi.matrix * tensor(identity(choi.d), ComplexMatrix(a.transpose()));
  return static_cast<double>(choi.d) * partial_trace(prod, Party::second, choi.d);
}

// ---------------------------------------------------------------------------
// Universal state inversion and concurrence
// ---------------------------------------------------------------------------

/// Tr(A) 1 - A.
inline ComplexMatrix state_inversion_analytic(const ComplexMatrix& a) {
  detail::require_square(a, "state_inversion_analytic");
  return a.trace() * ComplexMatrix::Identity(a.rows(), a.cols()) - a;
}

/// (1/d) sum_jk g_jk A^* (g_jk^dagger - g_jk^*) for Hermitian A.
inline ComplexMatrix state_inversion(const ComplexMatrix& a, const MatrixBasis& b) {
  const std::size_t d = b.dim();
  detail::require_operator(a, d, "state_inversion");
  if (!is_hermitian(a, tolerance(d))) throw PreconditionError("state_inversion: input is not Hermitian");
  const ComplexMatrix a_conj = a.conjugate();
  ComplexMatrix acc = ComplexMatrix::Zero(a.rows(), a.cols());
  for (const auto& g : b) acc.noalias() += g * a_conj * (g.adjoint() - g.conjugate());
  return acc / static_cast<double>(d);
}

namespace detail {

/// The antisymmetric Gell-Mann elements y_jk, j < k.
inline std::vector<ComplexMatrix> gellmann_y_elements(std::size_t d) {
  const MatrixBasis gm = gellmann_basis(d);
  std::vector<ComplexMatrix> ys;
  ys.reserve(d * (d - 1) / 2);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) ys.push_back(gm.at(k, j));
  }
  return ys;
}

}  // namespace detail

/// (2/d) sum_{j<k} y_jk A^* y_jk.
inline ComplexMatrix state_inversion_y(const ComplexMatrix& a) {
  const std::size_t d = static_cast<std::size_t>(a.rows());
  detail::require_square(a, "state_inversion_y");
  detail::require_basis_dim(d, "state_inversion_y");
  if (!is_hermitian(a, tolerance(d))) throw PreconditionError("state_inversion_y: input is not Hermitian");
  const ComplexMatrix a_conj = a.conjugate();
  ComplexMatrix acc = ComplexMatrix::Zero(a.rows(), a.cols());
  for (const auto& y : detail::gellmann_y_elements(d)) acc.noalias() += y * a_conj * y;
  return (2.0 / static_cast<double>(d)) * acc;
}

/// Tr(B) 1 - Tr_2(B) (x) 1 - 1 (x) Tr_1(B) + B.
inline ComplexMatrix state_inversion_two_analytic(const ComplexMatrix& m, std::size_t d) {
  detail::require_bipartite(m, d, "state_inversion_two_analytic");
  const ComplexMatrix one = identity(d);
  return m.trace() * identity(d * d) - tensor(partial_trace(m, Party::second, d), one) -
         tensor(one, partial_trace(m, Party::first, d)) + m;
}

/// Two-party inversion as the product of single-party expansions in basis b:
/// (1/d^2) sum_{a,c} (g_a (x) g_c) B^* (D_a (x) D_c) with D = g^dagger - g^*.
inline TwoPartyOperator state_inversion_two(const TwoPartyOperator& op, const MatrixBasis& b) {
  const std::size_t d = b.dim();
  if (op.d != d) throw DimensionError("state_inversion_two: operator and basis dimensions differ");
  detail::require_bipartite(op.matrix, d, "state_inversion_two");
  if (!is_hermitian(op.matrix, tolerance(d * d))) {
    throw PreconditionError("state_inversion_two: input is not Hermitian");
  }
  const ComplexMatrix conj = op.matrix.conjugate();
  std::vector<ComplexMatrix> diffs;
  diffs.reserve(b.size());
  for (const auto& g : b) diffs.emplace_back(g.adjoint() - g.conjugate());
  ComplexMatrix acc = ComplexMatrix::Zero(conj.rows(), conj.cols());
  for (std::size_t a = 0; a < b.size(); ++a) {
    if (diffs[a].norm() == 0.0) continue;
    for (std::size_t c = 0; c < b.size(); ++c) {
      if (diffs[c].norm() == 0.0) continue;
      acc.noalias() += tensor(b[a], b[c]) * conj * tensor(diffs[a], diffs[c]);
    }
  }
  const double dd = static_cast<double>(d);
  return {d, acc / (dd * dd)};
}

/// (4/d^2) sum_{j<k, l<m} (y_jk (x) y_lm) B^* (y_jk (x) y_lm).
inline TwoPartyOperator state_inversion_two_y(const TwoPartyOperator& op) {
  const std::size_t d = op.d;
  detail::require_basis_dim(d, "state_inversion_two_y");
  detail::require_bipartite(op.matrix, d, "state_inversion_two_y");
  if (!is_hermitian(op.matrix, tolerance(d * d))) {
    throw PreconditionError("state_inversion_two_y: input is not Hermitian");
  }
  const ComplexMatrix conj = op.matrix.conjugate();
  const auto ys = detail::gellmann_y_elements(d);
  ComplexMatrix acc = ComplexMatrix::Zero(conj.rows(), conj.cols());
  for (const auto& y1 : ys) {
    for (const auto& y2 : ys) {
      const ComplexMatrix yy = tensor(y1, y2);
      acc.noalias() += yy * conj * yy;
    }
  }
  const double dd = static_cast<double>(d);
  return {d, (4.0 / (dd * dd)) * acc};
}

/// Squared concurrence of a pure state on C^d (x) C^d:
/// (4/d^2) sum_{j<k, l<m} |<psi| y_jk (x) y_lm |psi^*>|^2, with psi^* the
/// entrywise conjugate in the computational basis.
inline double concurrence_squared(const ComplexVector& psi) {
  const auto n = static_cast<std::size_t>(psi.size());
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (n == 0 || d * d != n) {
    throw DimensionError("concurrence_squared: state length " + std::to_string(n) +
                         " is not d^2");
  }
  detail::require_basis_dim(d, "concurrence_squared");
  if (std::abs(psi.norm() - 1.0) > tolerance(d)) {
    throw PreconditionError("concurrence_squared: state is not normalized");
  }
  const ComplexVector psi_conj = psi.conjugate();
  const auto ys = detail::gellmann_y_elements(d);
  double acc = 0.0;
  for (const auto& y1 : ys) {
    for (const auto& y2 : ys) acc += std::norm(psi.dot(tensor(y1, y2) * psi_conj));
  }
  const double dd = static_cast<double>(d);
  return 4.0 / (dd * dd) * acc;
}

/// Tr[|psi><psi| S(|psi><psi|)] using the analytic two-party inversion.
inline double concurrence_squared_via_inversion(const ComplexVector& psi) {
  const auto n = static_cast<std::size_t>(psi.size());
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (n == 0 || d * d != n) throw DimensionError("concurrence_squared_via_inversion: bad length");
  const ComplexMatrix rho = psi * psi.adjoint();
  return (rho * state_inversion_two_analytic(rho, d)).trace().real();
}

}  // namespace hsbasis

#endif  // HSBASIS_MAPS_HPP
