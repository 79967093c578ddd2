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

#ifndef HSBASIS_IDENTITIES_HPP
#define HSBASIS_IDENTITIES_HPP

#include <hsbasis/operators.hpp>
#include <hsbasis/random.hpp>

#include <array>
#include <cctype>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hsbasis {

/// Catalogue of sum rules that hold for every orthogonal basis {g_jk}
/// normalized to Tr(g^dagger g) = d. Sums run over all basis indices.
enum class IdentityId {
  swap_expansion,       // SWAP = (1/d) sum g (x) g^dagger
  gg_dagger_sum,        // d^2 1 = sum g g^dagger
  trace_weighted_sum,   // d 1 = sum Tr(g) g^dagger
  trace_norm_sum,       // d^2 = sum |Tr g|^2
  bell_expansion,       // |Phi+><Phi+| = (1/d^2) sum g (x) g^*
  gg_conj_sum,          // d 1 = sum g g^*
  trace_weighted_conj,  // d 1 = sum Tr(g) g^*
  identity_4op_tensor,  // 1 (x) 1 = (1/d^2) sum g_ab^dagger g_jk (x) g_ab g_jk^dagger
  fourops_1,            // d^2 1 = sum g_ab^dagger g_jk g_ab g_jk^dagger
  fourops_2,            // d^3 1 = sum g_ab g_jk g_ab^* g_jk^*
  fourops_3,            // d^2 1 = sum g_ab g_jk^* g_ab^dagger g_jk
  bellbell_tensor,      // |Phi+><Phi+| = (1/d^4) sum g_ab g_jk (x) (g_ab g_jk)^*
  swapbell_tensor,      // |Phi+><Phi+| = (1/d^3) sum g_ab g_jk^* (x) g_ab^dagger g_jk
  tr1_bellbell,         // d^3 1 = sum Tr(g_ab g_jk) (g_ab g_jk)^*
  tr12_bellbell,        // d^4 = sum |Tr(g_ab g_jk)|^2
  trswap_choi,          // Tr_2(A (x) B SWAP) = A B
  purity_link,          // Tr(B^dagger (x) B SWAP) = (1/d) sum |b_jk|^2 = Tr(B^dagger B)
};

inline constexpr std::array<IdentityId, 17> kAllIdentities = {
    IdentityId::swap_expansion,      IdentityId::gg_dagger_sum,   IdentityId::trace_weighted_sum,
    IdentityId::trace_norm_sum,      IdentityId::bell_expansion,  IdentityId::gg_conj_sum,
    IdentityId::trace_weighted_conj, IdentityId::identity_4op_tensor, IdentityId::fourops_1,
    IdentityId::fourops_2,           IdentityId::fourops_3,       IdentityId::bellbell_tensor,
    IdentityId::swapbell_tensor,     IdentityId::tr1_bellbell,    IdentityId::tr12_bellbell,
    IdentityId::trswap_choi,         IdentityId::purity_link,
};

inline std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::swap_expansion: return "SWAP_EXPANSION";
    case IdentityId::gg_dagger_sum: return "GG_DAGGER_SUM";
    case IdentityId::trace_weighted_sum: return "TRACE_WEIGHTED_SUM";
    case IdentityId::trace_norm_sum: return "TRACE_NORM_SUM";
    case IdentityId::bell_expansion: return "BELL_EXPANSION";
    case IdentityId::gg_conj_sum: return "GG_CONJ_SUM";
    case IdentityId::trace_weighted_conj: return "TRACE_WEIGHTED_CONJ";
    case IdentityId::identity_4op_tensor: return "IDENTITY_4OP_TENSOR";
    case IdentityId::fourops_1: return "FOUROPS_1";
    case IdentityId::fourops_2: return "FOUROPS_2";
    case IdentityId::fourops_3: return "FOUROPS_3";
    case IdentityId::bellbell_tensor: return "BELLBELL_TENSOR";
    case IdentityId::swapbell_tensor: return "SWAPBELL_TENSOR";
    case IdentityId::tr1_bellbell: return "TR1_BELLBELL";
    case IdentityId::tr12_bellbell: return "TR12_BELLBELL";
    case IdentityId::trswap_choi: return "TRSWAP_CHOI";
    case IdentityId::purity_link: return "PURITY_LINK";
  }
  throw DomainError("identity_name: unknown identity");
}

inline std::string_view identity_lhs(IdentityId id) {
  switch (id) {
    case IdentityId::swap_expansion: return "(1/d) sum g_lm (x) g_lm^dagger vs SWAP";
    case IdentityId::gg_dagger_sum: return "sum g_jk g_jk^dagger vs d^2 1";
    case IdentityId::trace_weighted_sum: return "sum Tr(g_lm) g_lm^dagger vs d 1";
    case IdentityId::trace_norm_sum: return "sum |Tr g_lm|^2 vs d^2";
    case IdentityId::bell_expansion: return "(1/d^2) sum g_jk (x) g_jk^* vs |Phi+><Phi+|";
    case IdentityId::gg_conj_sum: return "sum g_jk g_jk^* vs d 1";
    case IdentityId::trace_weighted_conj: return "sum Tr(g_lm) g_lm^* vs d 1";
    case IdentityId::identity_4op_tensor:
      return "(1/d^2) sum g_ab^dagger g_jk (x) g_ab g_jk^dagger vs 1 (x) 1";
    case IdentityId::fourops_1: return "sum g_ab^dagger g_jk g_ab g_jk^dagger vs d^2 1";
    case IdentityId::fourops_2: return "sum g_ab g_jk g_ab^* g_jk^* vs d^3 1";
    case IdentityId::fourops_3: return "sum g_ab g_jk^* g_ab^dagger g_jk vs d^2 1";
    case IdentityId::bellbell_tensor:
      return "(1/d^4) sum g_ab g_jk (x) (g_ab g_jk)^* vs |Phi+><Phi+|";
    case IdentityId::swapbell_tensor:
      return "(1/d^3) sum g_ab g_jk^* (x) g_ab^dagger g_jk vs |Phi+><Phi+|";
    case IdentityId::tr1_bellbell: return "sum Tr(g_ab g_jk) (g_ab g_jk)^* vs d^3 1";
    case IdentityId::tr12_bellbell: return "sum |Tr(g_ab g_jk)|^2 vs d^4";
    case IdentityId::trswap_choi: return "Tr_2(A (x) B SWAP_g) vs A B";
    case IdentityId::purity_link: return "Tr(B^dagger (x) B SWAP_g) and (1/d) sum |b_jk|^2 vs Tr(B^dagger B)";
  }
  throw DomainError("identity_lhs: unknown identity");
}

/// Case-insensitive lookup by catalogue name.
inline std::optional<IdentityId> parse_identity(std::string_view name) {
  std::string upper(name);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (IdentityId id : kAllIdentities) {
    if (identity_name(id) == upper) return id;
  }
  return std::nullopt;
}

struct IdentityResult {
  IdentityId id;
  double residual = 0.0;
  double tolerance = 0.0;

  [[nodiscard]] bool passed() const { return residual <= tolerance; }
};

struct IdentityReport {
  std::vector<IdentityResult> results;

  [[nodiscard]] bool all_passed() const {
    for (const auto& r : results) {
      if (!r.passed()) return false;
    }
    return true;
  }
};

struct CatalogueOptions {
  /// Seeds the random operators used by TRSWAP_CHOI and PURITY_LINK.
  std::uint64_t seed = 1;
  bool parallel = false;
};

namespace detail {

/// Absolute tolerance for scalar identities.
inline double scalar_tolerance(std::size_t d) {
  const double dd = static_cast<double>(d);
  return 1e-9 * dd * dd;
}

/// Derived seed per identity so results do not depend on evaluation order.
inline std::uint64_t identity_seed(std::uint64_t seed, IdentityId id) {
  return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(id) + 1;
}

struct BasisCache {
  explicit BasisCache(const MatrixBasis& b) : basis(b) {
    dag.reserve(b.size());
    conj.reserve(b.size());
    for (const auto& g : b) {
      dag.emplace_back(g.adjoint());
      conj.emplace_back(g.conjugate());
    }
  }
  const MatrixBasis& basis;
  std::vector<ComplexMatrix> dag;
  std::vector<ComplexMatrix> conj;
};

inline IdentityResult evaluate(IdentityId id, const MatrixBasis& b, std::uint64_t seed) {
  const std::size_t d = b.dim();
  const double dd = static_cast<double>(d);
  const auto n = static_cast<Eigen::Index>(d);
  const ComplexMatrix one = identity(d);
  const double tau = tolerance(d);
  const double tau2 = tolerance(d * d);
  const double tau4 = tau * dd * dd;
  const BasisCache c(b);
  const std::size_t count = b.size();

  auto zero = [&] { return ComplexMatrix(ComplexMatrix::Zero(n, n)); };
  auto zero2 = [&] { return ComplexMatrix(ComplexMatrix::Zero(n * n, n * n)); };

  switch (id) {
    case IdentityId::swap_expansion:
      return {id, residual(swap_sum(b, Placement::second), swap_operator(d).matrix), tau2};

    case IdentityId::gg_dagger_sum: {
      ComplexMatrix acc = zero();
      for (std::size_t i = 0; i < count; ++i) acc.noalias() += b[i] * c.dag[i];
      return {id, residual(acc, dd * dd * one), tau};
    }
    case IdentityId::trace_weighted_sum: {
      ComplexMatrix acc = zero();
      for (std::size_t i = 0; i < count; ++i) acc += b[i].trace() * c.dag[i];
      return {id, residual(acc, dd * one), tau};
    }
    case IdentityId::trace_norm_sum: {
      double acc = 0.0;
      for (const auto& g : b) acc += std::norm(g.trace());
      return {id, std::abs(acc - dd * dd), scalar_tolerance(d)};
    }
    case IdentityId::bell_expansion:
      return {id, residual(bell_sum(b, Placement::second), bell_projector(d).matrix), tau2};

    case IdentityId::gg_conj_sum: {
      ComplexMatrix acc = zero();
      for (std::size_t i = 0; i < count; ++i) acc.noalias() += b[i] * c.conj[i];
      return {id, residual(acc, dd * one), tau};
    }
    case IdentityId::trace_weighted_conj: {
      ComplexMatrix acc = zero();
      for (std::size_t i = 0; i < count; ++i) acc += b[i].trace() * c.conj[i];
      return {id, residual(acc, dd * one), tau};
    }
    case IdentityId::identity_4op_tensor: {
      ComplexMatrix acc = zero2();
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t j = 0; j < count; ++j) {
          acc += tensor(ComplexMatrix(c.dag[a] * b[j]), ComplexMatrix(b[a] * c.dag[j]));
        }
      }
      return {id, residual(acc / (dd * dd), identity(d * d)), tau2};
    }
    case IdentityId::fourops_1: {
      ComplexMatrix acc = zero();
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t j = 0; j < count; ++j) {
          const ComplexMatrix left = c.dag[a] * b[j];
          acc.noalias() += left * b[a] * c.dag[j];
        }
      }
      return {id, residual(acc, dd * dd * one), tau4};
    }
    case IdentityId::fourops_2: {
      ComplexMatrix acc = zero();
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t j = 0; j < count; ++j) {
          const ComplexMatrix left = b[a] * b[j];
          acc.noalias() += left * c.conj[a] * c.conj[j];
        }
      }
      return {id, residual(acc, dd * dd * dd * one), tau4};
    }
    case IdentityId::fourops_3: {
      ComplexMatrix acc = zero();
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t j = 0; j < count; ++j) {
          const ComplexMatrix left = b[a] * c.conj[j];
          acc.noalias() += left * c.dag[a] * b[j];
        }
      }
      return {id, residual(acc, dd * dd * one), tau4};
    }
    case IdentityId::bellbell_tensor: {
      ComplexMatrix acc = zero2();
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t j = 0; j < count; ++j) {
          const ComplexMatrix prod = b[a] * b[j];
          acc += tensor(prod, ComplexMatrix(prod.conjugate()));
        }
      }
      return {id, residual(acc / (dd * dd * dd * dd), bell_projector(d).matrix), tau2};
    }
    case IdentityId::swapbell_tensor: {
      ComplexMatrix acc = zero2();
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t j = 0; j < count; ++j) {
          acc += tensor(ComplexMatrix(b[a] * c.conj[j]), ComplexMatrix(c.dag[a] * b[j]));
        }
      }
      return {id, residual(acc / (dd * dd * dd), bell_projector(d).matrix), tau2};
    }
    case IdentityId::tr1_bellbell: {
      ComplexMatrix acc = zero();
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t j = 0; j < count; ++j) {
          const ComplexMatrix prod = b[a] * b[j];
          acc += prod.trace() * prod.conjugate();
        }
      }
      return {id, residual(acc, dd * dd * dd * one), tau4};
    }
    case IdentityId::tr12_bellbell: {
      double acc = 0.0;
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t j = 0; j < count; ++j) acc += std::norm((b[a] * b[j]).trace());
      }
      return {id, std::abs(acc - dd * dd * dd * dd), scalar_tolerance(d)};
    }
    case IdentityId::trswap_choi: {
      RandomSource rng(seed);
      const ComplexMatrix a = rng.matrix(d);
      const ComplexMatrix bm = rng.matrix(d);
      const ComplexMatrix lhs = partial_trace(tensor(a, bm) * swap_sum(b, Placement::second),
                                              Party::second, d);
      return {id, residual(lhs, a * bm), tau};
    }
    case IdentityId::purity_link: {
      RandomSource rng(seed);
      const ComplexMatrix bm = rng.matrix(d);
      const Complex via_swap =
          (tensor(ComplexMatrix(bm.adjoint()), bm) * swap_sum(b, Placement::second)).trace();
      double bloch_length = 0.0;
      for (const auto& g : b) bloch_length += std::norm(hs_inner(g, bm));
      bloch_length /= dd;
      const double purity = bm.squaredNorm();
      const double res = std::max(std::abs(via_swap - purity), std::abs(bloch_length - purity));
      return {id, res, scalar_tolerance(d)};
    }
  }
  throw DomainError("check_identity: unknown identity");
}

}  // namespace detail

/// Evaluates both sides of one catalogue identity in basis b. The basis is
/// not validated; a non-orthogonal basis shows up as large residuals.
inline IdentityResult check_identity(IdentityId id, const MatrixBasis& b,
                                     const CatalogueOptions& options = {}) {
  return detail::evaluate(id, b, detail::identity_seed(options.seed, id));
}

inline IdentityReport run_catalogue(const MatrixBasis& b, std::span<const IdentityId> ids,
                                    const CatalogueOptions& options = {}) {
  IdentityReport report;
  report.results.reserve(ids.size());
  if (!options.parallel) {
    for (IdentityId id : ids) report.results.push_back(check_identity(id, b, options));
    return report;
  }
  std::vector<std::future<IdentityResult>> pending;
  pending.reserve(ids.size());
  for (IdentityId id : ids) {
    pending.push_back(std::async(std::launch::async,
                                 [&b, id, options] { return check_identity(id, b, options); }));
  }
  for (auto& f : pending) report.results.push_back(f.get());
  return report;
}

inline IdentityReport run_catalogue(const MatrixBasis& b, const CatalogueOptions& options = {}) {
  return run_catalogue(b, std::span<const IdentityId>(kAllIdentities), options);
}

}  // namespace hsbasis

#endif  // HSBASIS_IDENTITIES_HPP
