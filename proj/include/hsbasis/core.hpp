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

#ifndef HSBASIS_CORE_HPP
#define HSBASIS_CORE_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hsbasis {

using Complex = std::complex<double>;

/// Dense complex matrix in row-major storage: entry (r, c) lives at flat
/// index r * cols + c.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Absolute Frobenius tolerance for an identity between d x d matrices.
/// Pass d * d for identities on the two-party space.
inline double tolerance(std::size_t d) {
  const double dd = static_cast<double>(d);
  return 1e-10 * dd * dd;
}

enum class Party { first = 1, second = 2 };

/// Composite index |jk> <-> j * d + k, used for rows and columns alike.
struct BipartiteIndex {
  std::size_t d;

  [[nodiscard]] constexpr std::size_t flat(std::size_t j, std::size_t k) const {
    return j * d + k;
  }
  [[nodiscard]] constexpr std::pair<std::size_t, std::size_t> split(
      std::size_t flat_index) const {
    return {flat_index / d, flat_index % d};
  }
};

namespace detail {

inline void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

inline void require_bipartite(const ComplexMatrix& m, std::size_t d, const char* what) {
  const auto n = static_cast<Eigen::Index>(d * d);
  if (d == 0 || m.rows() != n || m.cols() != n) {
    throw DimensionError(std::string(what) + ": expected a " + std::to_string(n) + "x" +
                         std::to_string(n) + " matrix for local dimension " +
                         std::to_string(d) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

inline std::size_t local_dimension(const ComplexMatrix& m, const char* what) {
  require_square(m, what);
  const auto n = static_cast<std::size_t>(m.rows());
  auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d * d != n) {
    throw DimensionError(std::string(what) + ": " + std::to_string(n) +
                         " is not the square of a local dimension");
  }
  return d;
}

}  // namespace detail

inline ComplexMatrix identity(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return ComplexMatrix::Identity(m, m);
}

/// |row><col| in dimension d.
inline ComplexMatrix matrix_unit(std::size_t d, std::size_t row, std::size_t col) {
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
  return e;
}

/// Kronecker product A (x) B; row (i, k) of the result is i * B.rows() + k.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

/// Hilbert-Schmidt inner product Tr(A^dagger B).
inline Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
  return (a.conjugate().cwiseProduct(b)).sum();
}

inline Complex trace(const ComplexMatrix& a) {
  detail::require_square(a, "trace");
  return a.trace();
}

/// Frobenius norm of the difference; the residual used by every identity check.
inline double residual(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw DimensionError("residual: shape mismatch");
  }
  return (lhs - rhs).norm();
}

/// Traces out one factor of a d^2 x d^2 operator. Party::first removes the
/// left tensor factor, Party::second the right one.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, Party party, std::size_t d) {
  detail::require_bipartite(m, d, "partial_trace");
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      Complex acc = 0.0;
      for (Eigen::Index s = 0; s < n; ++s) {
        acc += party == Party::first ? m(s * n + a, s * n + b) : m(a * n + s, b * n + s);
      }
      out(a, b) = acc;
    }
  }
  return out;
}

/// Partial transpose by index permutation: B_{jk,lm} -> B_{jm,lk} on the
/// second party, B_{jk,lm} -> B_{lk,jm} on the first.
inline ComplexMatrix partial_transpose_raw(const ComplexMatrix& m, Party party,
                                           std::size_t d) {
  detail::require_bipartite(m, d, "partial_transpose_raw");
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix out(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index q = 0; q < n; ++q) {
          out(j * n + k, l * n + q) =
              party == Party::second ? m(j * n + q, l * n + k) : m(l * n + k, j * n + q);
        }
      }
    }
  }
  return out;
}

/// Reshuffling (realignment): B_{jk,lm} -> B_{jl,km}.
inline ComplexMatrix reshuffle_raw(const ComplexMatrix& m, std::size_t d) {
  detail::require_bipartite(m, d, "reshuffle_raw");
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix out(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index q = 0; q < n; ++q) {
          out(j * n + k, l * n + q) = m(j * n + l, k * n + q);
        }
      }
    }
  }
  return out;
}

/// Row-major stacking: vec(|j><k|) is the unit vector at j * d + k.
inline ComplexVector vectorize(const ComplexMatrix& a) {
  detail::require_square(a, "vectorize");
  return Eigen::Map<const ComplexVector>(a.data(), a.size());
}

inline ComplexMatrix devectorize(const ComplexVector& v) {
  const auto n = static_cast<std::size_t>(v.size());
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (n == 0 || d * d != n) {
    throw DimensionError("devectorize: length " + std::to_string(n) + " is not a perfect square");
  }
  const auto m = static_cast<Eigen::Index>(d);
  return Eigen::Map<const ComplexMatrix>(v.data(), m, m);
}

inline bool is_hermitian(const ComplexMatrix& a, double tol) {
  return a.rows() == a.cols() && (a - a.adjoint()).norm() <= tol;
}

inline bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm() <= tol;
}

}  // namespace hsbasis

#endif  // HSBASIS_CORE_HPP
