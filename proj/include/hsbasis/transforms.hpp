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

#ifndef HSBASIS_TRANSFORMS_HPP
#define HSBASIS_TRANSFORMS_HPP

#include <hsbasis/bases.hpp>

#include <optional>
#include <vector>

namespace hsbasis {

namespace detail {

inline void require_valid(const MatrixBasis& b, const char* what) {
  if (!is_valid_basis(b)) {
    throw PreconditionError(std::string(what) + ": basis fails the orthogonality check");
  }
}

}  // namespace detail

/// Coefficients S with h_jk = sum_lm S_{jk,lm} g_lm, obtained by projection:
/// S_{jk,lm} = Tr(g_lm^dagger h_jk) / d.
inline BasisChange change_of_basis(const MatrixBasis& target, const MatrixBasis& source) {
  if (target.dim() != source.dim()) {
    throw DimensionError("change_of_basis: bases have different dimensions");
  }
  detail::require_valid(target, "change_of_basis");
  detail::require_valid(source, "change_of_basis");
  const std::size_t d = target.dim();
  const auto n = static_cast<Eigen::Index>(d * d);
  const double inv_d = 1.0 / static_cast<double>(d);
  ComplexMatrix s(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      s(r, c) = inv_d * hs_inner(source[static_cast<std::size_t>(c)],
                                 target[static_cast<std::size_t>(r)]);
    }
  }
  return {d, std::move(s)};
}

/// U with g_jk = sqrt(d) sum_lm U_{jk,lm} |l><m|.
inline BasisChange to_standard(const MatrixBasis& b) {
  return change_of_basis(b, standard_basis(b.dim()));
}

/// The inverse coefficients, sqrt(d) |j><k| = sum_lm V_{jk,lm} g_lm, with
/// V = U^dagger.
inline BasisChange from_standard(const MatrixBasis& b) {
  BasisChange u = to_standard(b);
  return {u.d, u.coeffs.adjoint()};
}

struct BlockStructure {
  /// d x d block: g_{diag[r]} = sqrt(d) sum_k D_{rk} |k><k|.
  ComplexMatrix diagonal;
  /// d(d-1) x d(d-1) block between the off-diagonal elements and the
  /// off-diagonal matrix units |l><m|, l != m, in ascending flat order.
  ComplexMatrix offdiagonal;
  double leakage = 0.0;
};

/// Splits U (as returned by to_standard) into its diagonal and off-diagonal
/// blocks. Fails when any cross-block coefficient exceeds tolerance.
inline std::optional<BlockStructure> block_structure(const BasisChange& u,
                                                     const BasisSplit& split) {
  const std::size_t d = u.d;
  const auto n = static_cast<Eigen::Index>(d * d);
  if (u.coeffs.rows() != n || u.coeffs.cols() != n) {
    throw DimensionError("block_structure: coefficient matrix does not match dimension");
  }
  if (split.diagonal.size() != d || split.offdiagonal.size() != d * (d - 1)) {
    throw PreconditionError("block_structure: split has wrong subset sizes");
  }
  std::vector<std::size_t> diag_rows = split.diagonal;
  std::vector<std::size_t> off_rows = split.offdiagonal;
  std::sort(diag_rows.begin(), diag_rows.end());
  std::sort(off_rows.begin(), off_rows.end());

  std::vector<std::size_t> diag_cols;
  std::vector<std::size_t> off_cols;
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t m = 0; m < d; ++m) (l == m ? diag_cols : off_cols).push_back(l * d + m);
  }

  auto entry = [&](std::size_t r, std::size_t c) {
    return u.coeffs(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  };

  double leak_sq = 0.0;
  for (std::size_t r : diag_rows) {
    for (std::size_t c : off_cols) leak_sq += std::norm(entry(r, c));
  }
  for (std::size_t r : off_rows) {
    for (std::size_t c : diag_cols) leak_sq += std::norm(entry(r, c));
  }
  const double leakage = std::sqrt(leak_sq);
  if (leakage > tolerance(d)) return std::nullopt;

  BlockStructure blocks;
  blocks.leakage = leakage;
  const auto nd = static_cast<Eigen::Index>(diag_rows.size());
  const auto no = static_cast<Eigen::Index>(off_rows.size());
  blocks.diagonal.resize(nd, nd);
  blocks.offdiagonal.resize(no, no);
  for (Eigen::Index r = 0; r < nd; ++r) {
    for (Eigen::Index c = 0; c < nd; ++c) {
      blocks.diagonal(r, c) = entry(diag_rows[static_cast<std::size_t>(r)],
                                    diag_cols[static_cast<std::size_t>(c)]);
    }
  }
  for (Eigen::Index r = 0; r < no; ++r) {
    for (Eigen::Index c = 0; c < no; ++c) {
      blocks.offdiagonal(r, c) = entry(off_rows[static_cast<std::size_t>(r)],
                                       off_cols[static_cast<std::size_t>(c)]);
    }
  }
  return blocks;
}

}  // namespace hsbasis

#endif  // HSBASIS_TRANSFORMS_HPP
