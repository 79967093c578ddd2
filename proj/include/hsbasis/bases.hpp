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

#ifndef HSBASIS_BASES_HPP
#define HSBASIS_BASES_HPP

#include <hsbasis/core.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hsbasis {

enum class BasisKind { standard, gellmann, weyl, custom };

inline std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::standard: return "standard";
    case BasisKind::gellmann: return "gellmann";
    case BasisKind::weyl: return "weyl";
    case BasisKind::custom: return "custom";
  }
  return "custom";
}

inline std::optional<BasisKind> parse_basis_kind(std::string_view name) {
  if (name == "standard") return BasisKind::standard;
  if (name == "gellmann") return BasisKind::gellmann;
  if (name == "weyl") return BasisKind::weyl;
  if (name == "custom") return BasisKind::custom;
  return std::nullopt;
}

/// Ordered list of d^2 operators g_jk, element (j, k) stored at flat position
/// j * d + k. Orthogonality is not enforced here; see validate_basis.
class MatrixBasis {
 public:
  MatrixBasis(std::size_t d, BasisKind kind, std::vector<ComplexMatrix> elements)
      : d_(d), kind_(kind), elements_(std::move(elements)) {
    if (d_ < 1) throw DomainError("MatrixBasis: dimension must be positive");
    if (elements_.size() != d_ * d_) {
      throw DimensionError("MatrixBasis: expected " + std::to_string(d_ * d_) +
                           " elements, got " + std::to_string(elements_.size()));
    }
    const auto n = static_cast<Eigen::Index>(d_);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i].rows() != n || elements_[i].cols() != n) {
        throw DimensionError("MatrixBasis: element " + std::to_string(i) + " is not " +
                             std::to_string(d_) + "x" + std::to_string(d_));
      }
    }
  }

  [[nodiscard]] std::size_t dim() const { return d_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] BasisKind kind() const { return kind_; }

  [[nodiscard]] const ComplexMatrix& operator[](std::size_t flat) const {
    return elements_[flat];
  }
  [[nodiscard]] const ComplexMatrix& at(std::size_t j, std::size_t k) const {
    return elements_.at(j * d_ + k);
  }
  [[nodiscard]] const std::vector<ComplexMatrix>& elements() const { return elements_; }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

 private:
  std::size_t d_;
  BasisKind kind_;
  std::vector<ComplexMatrix> elements_;
};

/// Coefficient matrix between two bases: row (j, k) indexes the target
/// element, column (l, m) the source element, both in flat order.
struct BasisChange {
  std::size_t d;
  ComplexMatrix coeffs;
};

namespace detail {

inline void require_basis_dim(std::size_t d, const char* what) {
  if (d < 2) throw DomainError(std::string(what) + ": dimension must be at least 2");
}

}  // namespace detail

/// e_jk = sqrt(d) |j><k|.
inline MatrixBasis standard_basis(std::size_t d) {
  detail::require_basis_dim(d, "standard_basis");
  const double scale = std::sqrt(static_cast<double>(d));
  std::vector<ComplexMatrix> elements;
  elements.reserve(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) elements.push_back(scale * matrix_unit(d, j, k));
  }
  return {d, BasisKind::standard, std::move(elements)};
}

/// Generalized Gell-Mann basis: (0,0) is the identity, (k,l) with k < l the
/// symmetric x_kl, (l,k) the antisymmetric y_kl, (l,l) the diagonal z_ll.
inline MatrixBasis gellmann_basis(std::size_t d) {
  detail::require_basis_dim(d, "gellmann_basis");
  const auto n = static_cast<Eigen::Index>(d);
  const double offdiag = std::sqrt(static_cast<double>(d) / 2.0);
  std::vector<ComplexMatrix> elements(d * d, ComplexMatrix::Zero(n, n));

  elements[0] = identity(d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = k + 1; l < d; ++l) {
      const auto ki = static_cast<Eigen::Index>(k);
      const auto li = static_cast<Eigen::Index>(l);
      ComplexMatrix& x = elements[k * d + l];
      x(ki, li) = offdiag;
      x(li, ki) = offdiag;
      ComplexMatrix& y = elements[l * d + k];
      y(ki, li) = Complex(0.0, -offdiag);
      y(li, ki) = Complex(0.0, offdiag);
    }
  }
  for (std::size_t l = 1; l < d; ++l) {
    const double ld = static_cast<double>(l);
    const double scale = std::sqrt(static_cast<double>(d) / (ld * (ld + 1.0)));
    ComplexMatrix& z = elements[l * d + l];
    for (std::size_t j = 0; j < l; ++j) {
      z(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = scale;
    }
    z(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(l)) = -ld * scale;
  }
  return {d, BasisKind::gellmann, std::move(elements)};
}

/// Weyl operators D_jk = Z^j X^k w^{-jk/2} with w = exp(2 pi i / d) and the
/// half power fixed to exp(pi i / d).
inline MatrixBasis weyl_basis(std::size_t d) {
  detail::require_basis_dim(d, "weyl_basis");
  const auto n = static_cast<Eigen::Index>(d);
  const std::size_t period = 2 * d;
  std::vector<ComplexMatrix> elements;
  elements.reserve(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      ComplexMatrix w = ComplexMatrix::Zero(n, n);
      for (std::size_t m = 0; m < d; ++m) {
        const std::size_t row = (m + k) % d;
        // phase exponent in units of pi / d, reduced mod 2d
        const std::size_t units = (2 * j * row + period * d - (j * k) % period) % period;
        const double angle = kPi * static_cast<double>(units) / static_cast<double>(d);
        w(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(m)) = std::polar(1.0, angle);
      }
      elements.push_back(std::move(w));
    }
  }
  return {d, BasisKind::weyl, std::move(elements)};
}

inline MatrixBasis make_basis(BasisKind kind, std::size_t d) {
  switch (kind) {
    case BasisKind::standard: return standard_basis(d);
    case BasisKind::gellmann: return gellmann_basis(d);
    case BasisKind::weyl: return weyl_basis(d);
    case BasisKind::custom: break;
  }
  throw DomainError("make_basis: custom bases have no built-in construction");
}

/// Result of the Gram-matrix test Tr(g_a^dagger g_b) == d delta_ab.
struct BasisValidation {
  double max_deviation = 0.0;
  std::size_t worst_row = 0;
  std::size_t worst_col = 0;
  double tolerance = 0.0;
  std::string message;

  [[nodiscard]] bool passed() const { return message.empty() && max_deviation <= tolerance; }
};

inline BasisValidation validate_basis(const MatrixBasis& b) {
  const std::size_t d = b.dim();
  BasisValidation report;
  report.tolerance = tolerance(d);
  const std::size_t n = b.size();
  const double norm = static_cast<double>(d);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      const Complex gram = hs_inner(b[r], b[c]);
      const double dev = std::abs(gram - (r == c ? Complex(norm) : Complex(0.0)));
      if (!std::isfinite(dev)) {
        report.message = "non-finite Gram entry";
        report.worst_row = r;
        report.worst_col = c;
        return report;
      }
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        report.worst_row = r;
        report.worst_col = c;
      }
    }
  }
  return report;
}

inline bool is_valid_basis(const MatrixBasis& b) { return validate_basis(b).passed(); }

/// New basis h_jk = sum_lm U_{jk,lm} g_lm. U must be unitary.
inline MatrixBasis rotated_basis(const MatrixBasis& b, const BasisChange& u) {
  const std::size_t d = b.dim();
  const auto n = static_cast<Eigen::Index>(d * d);
  if (u.d != d || u.coeffs.rows() != n || u.coeffs.cols() != n) {
    throw DimensionError("rotated_basis: coefficient matrix does not match basis dimension");
  }
  if (!is_unitary(u.coeffs, tolerance(d))) {
    throw PreconditionError("rotated_basis: coefficient matrix is not unitary");
  }
  const auto m = static_cast<Eigen::Index>(d);
  std::vector<ComplexMatrix> elements(d * d, ComplexMatrix::Zero(m, m));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Complex s = u.coeffs(r, c);
      if (s != Complex(0.0)) elements[static_cast<std::size_t>(r)] += s * b[static_cast<std::size_t>(c)];
    }
  }
  return {d, BasisKind::custom, std::move(elements)};
}

/// Flat indices of the purely diagonal and purely off-diagonal elements.
struct BasisSplit {
  std::vector<std::size_t> diagonal;
  std::vector<std::size_t> offdiagonal;
};

inline std::optional<BasisSplit> split_diag_offdiag(const MatrixBasis& b) {
  const std::size_t d = b.dim();
  const double tol = tolerance(d);
  BasisSplit split;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const ComplexMatrix& g = b[i];
    const double diag_norm = g.diagonal().norm();
    double off_sq = 0.0;
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      for (Eigen::Index c = 0; c < g.cols(); ++c) {
        if (r != c) off_sq += std::norm(g(r, c));
      }
    }
    const double off_norm = std::sqrt(off_sq);
    if (off_norm <= tol) {
      split.diagonal.push_back(i);
    } else if (diag_norm <= tol) {
      split.offdiagonal.push_back(i);
    } else {
      return std::nullopt;
    }
  }
  if (split.diagonal.size() != d || split.offdiagonal.size() != d * (d - 1)) return std::nullopt;
  return split;
}

}  // namespace hsbasis

#endif  // HSBASIS_BASES_HPP
