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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <hsbasis/hsbasis.hpp>
#include <hsbasis/io.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "process.hpp"

using namespace hsbasis;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  double worst = 0.0;  // worst residual relative to its tolerance
  std::string note;

  void check(double residual, double tol) {
    worst = std::max(worst, tol > 0.0 ? residual / tol : residual);
    if (!(residual <= tol)) pass = false;
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<MatrixBasis> builtins(std::size_t d) {
  return {standard_basis(d), gellmann_basis(d), weyl_basis(d)};
}

MatrixBasis random_basis(RandomSource& rng, std::size_t d) {
  return rotated_basis(standard_basis(d), {d, rng.haar_unitary(d * d)});
}

double tol_pinned(std::size_t d) { return 1e-10 * static_cast<double>(d * d); }

Outcome basis_validity() {
  Outcome o;
  const auto t0 = Clock::now();
  for (std::size_t d = 2; d <= 6; ++d) {
    for (const auto& b : builtins(d)) o.check(validate_basis(b).max_deviation, tol_pinned(d));
  }
  const double t = seconds_since(t0);
  o.require(t < 5.0, "runtime " + std::to_string(t) + " s");
  return o;
}

ComplexMatrix pauli(int k) {
  const Complex i(0.0, 1.0);
  ComplexMatrix s(2, 2);
  switch (k) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

Outcome pauli_recovery() {
  Outcome o;
  const MatrixBasis gm = gellmann_basis(2);
  o.require(gm.at(0, 0) == pauli(0) && gm.at(0, 1) == pauli(1) && gm.at(1, 0) == pauli(2) &&
                gm.at(1, 1) == pauli(3),
            "gellmann(2) differs from the Paulis");
  // Weyl layout: (0,0) = 1, (0,1) = sigma_1, (1,0) = sigma_3, (1,1) = sigma_2.
  const MatrixBasis w = weyl_basis(2);
  const std::pair<std::size_t, int> map[4] = {{0, 0}, {1, 1}, {2, 3}, {3, 2}};
  for (const auto& [flat, k] : map) {
    o.check(std::abs(std::abs(hs_inner(pauli(k), w[flat])) / 2.0 - 1.0), 1e-12);
  }
  return o;
}

Outcome swap_and_bell() {
  Outcome o;
  const auto t0 = Clock::now();
  for (std::size_t d = 2; d <= 5; ++d) {
    RandomSource rng(300 + d);
    std::vector<MatrixBasis> bases = builtins(d);
    for (int i = 0; i < 20; ++i) bases.push_back(random_basis(rng, d));
    // Reshuffling the identity gives d |Phi+><Phi+|.
    const ComplexMatrix bell = oracle::reshuffle(identity(d * d), d) / static_cast<double>(d);
    ComplexMatrix swap_ref = ComplexMatrix::Zero(static_cast<Eigen::Index>(d * d), static_cast<Eigen::Index>(d * d));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) swap_ref += oracle::kron(oracle::unit(d, j, k), oracle::unit(d, k, j));
    for (const auto& b : bases) {
      o.check(residual(swap_expansion(b).matrix, swap_ref), tol_pinned(d));
      o.check(residual(bell_expansion(b).matrix, bell), tol_pinned(d));
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 30.0, "runtime " + std::to_string(t) + " s");
  return o;
}

Outcome identity_catalogue() {
  Outcome o;
  const std::vector<IdentityId> four = {IdentityId::identity_4op_tensor, IdentityId::fourops_1,
                                        IdentityId::fourops_2,           IdentityId::fourops_3,
                                        IdentityId::bellbell_tensor,     IdentityId::swapbell_tensor,
                                        IdentityId::tr1_bellbell,        IdentityId::tr12_bellbell};
  double four_time_d4 = 0.0;
  for (std::size_t d = 2; d <= 4; ++d) {
    RandomSource rng(400 + d);
    std::vector<MatrixBasis> bases = builtins(d);
    for (int i = 0; i < 5; ++i) bases.push_back(random_basis(rng, d));
    for (const auto& b : bases) {
      const IdentityReport r = run_catalogue(b);
      if (d == 4) {
        // Only the four-factor identities carry a time budget; time them separately.
        const auto t1 = Clock::now();
        (void)run_catalogue(b, four);
        four_time_d4 = std::max(four_time_d4, seconds_since(t1));
      }
      for (const auto& res : r.results) {
        o.check(res.residual, res.tolerance);
        if (!res.passed()) o.note = std::string(identity_name(res.id)) + " failed at d=" + std::to_string(d);
      }
    }
  }
  o.require(four_time_d4 < 60.0, "four-factor identities took " + std::to_string(four_time_d4) + " s at d=4");
  return o;
}

Outcome map_oracles() {
  Outcome o;
  for (std::size_t d = 2; d <= 5; ++d) {
    RandomSource rng(500 + d);
    const auto bases = builtins(d);
    for (int i = 0; i < 20; ++i) {
      const ComplexMatrix a = rng.matrix(d);
      const TwoPartyOperator m{d, rng.matrix(d * d)};
      const MatrixBasis& b = bases[static_cast<std::size_t>(i) % bases.size()];
      o.check(residual(trace_map_apply(a, b), a.trace() * identity(d)), tol_pinned(d));
      o.check(residual(transpose_map_apply(a, b), oracle::transpose(a)), tol_pinned(d));
      for (Party p : {Party::first, Party::second}) {
        o.check(residual(partial_transpose_map(m, p, b).matrix, oracle::partial_transpose(m.matrix, p, d)),
                tol_pinned(d));
      }
      o.check(residual(reshuffle_map(m, b).matrix, oracle::reshuffle(m.matrix, d)), tol_pinned(d));
    }
  }
  return o;
}

Outcome choi_round_trip() {
  Outcome o;
  for (std::size_t d = 2; d <= 4; ++d) {
    RandomSource rng(600 + d);
    const double dd = static_cast<double>(d * d);
    for (int i = 0; i < 10; ++i) {
      const Superoperator s{d, rng.matrix(d * d)};
      const ChoiState c = choi_state(s, gellmann_basis(d));
      const ComplexMatrix a = rng.matrix(d);
      o.check(residual(apply_via_choi(c, a), s.apply(a)), 1e-9 * dd);
    }
    for (const auto& b : builtins(d)) {
      const auto id = superop_from_action([](const ComplexMatrix& x) { return x; }, b);
      o.check(residual(choi_state(id, b).matrix, bell_projector(d).matrix), 1e-12 * dd);
    }
  }
  return o;
}

Outcome state_inversion_forms() {
  Outcome o;
  for (std::size_t d = 2; d <= 5; ++d) {
    RandomSource rng(700 + d);
    for (int i = 0; i < 5; ++i) {
      const ComplexMatrix a = rng.hermitian(d);
      const ComplexMatrix expect = state_inversion_analytic(a);
      for (const auto& b : builtins(d)) o.check(residual(state_inversion(a, b), expect), tol_pinned(d));
      o.check(residual(state_inversion_y(a), expect), tol_pinned(d));
    }
    if (d <= 4) {
      const ComplexMatrix m = rng.hermitian(d * d);
      const ComplexMatrix expect = state_inversion_two_analytic(m, d);
      for (const auto& b : builtins(d)) o.check(residual(state_inversion_two({d, m}, b).matrix, expect), tol_pinned(d));
      o.check(residual(state_inversion_two_y({d, m}).matrix, expect), tol_pinned(d));
    }
  }
  return o;
}

Outcome concurrence_values() {
  Outcome o;
  RandomSource rng(800);
  for (std::size_t d = 2; d <= 6; ++d) {
    for (int i = 0; i < 50; ++i) {
      o.check(std::abs(concurrence_squared(tensor(rng.unit_vector(d), rng.unit_vector(d)))), 1e-10);
    }
    o.check(std::abs(concurrence_squared(bell_state(d)) - 2.0 * (1.0 - 1.0 / static_cast<double>(d))), 1e-10);
  }
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = 2 + static_cast<std::size_t>(i) % 4;
    const ComplexVector psi = rng.unit_vector(d * d);
    const ComplexMatrix u = tensor(rng.haar_unitary(d), rng.haar_unitary(d));
    o.check(std::abs(concurrence_squared(psi) - concurrence_squared(u * psi)), 1e-9);
  }
  return o;
}

Outcome cli_determinism() {
  using hsbasis::testing::run_cli;
  Outcome o;
  hsbasis::testing::ScratchDir dir("acceptance");
  const std::string cfg = "verify --dim 3 --basis random --seed 17 --report machine --out ";
  const auto a = run_cli(cfg + dir.file("a.json").string());
  const auto b = run_cli(cfg + dir.file("b.json").string());
  const std::string ra = hsbasis::testing::slurp(dir.file("a.json"));
  o.require(a.exit_code == 0 && b.exit_code == 0, "passing run did not exit 0");
  o.require(!ra.empty() && ra == hsbasis::testing::slurp(dir.file("b.json")), "reports differ");

  auto elements = weyl_basis(2).elements();
  elements[1] *= 1.5;
  io::write_json_file(dir.file("scaled.json").string(), io::to_json(MatrixBasis(2, BasisKind::custom, elements)));
  o.require(run_cli("verify --basis file:" + dir.file("scaled.json").string()).exit_code == 1,
            "seeded failure did not exit 1");

  hsbasis::testing::write_text(dir.file("malformed.json"), R"({"rows": 2, "cols": 2, "entries": [[1, 0]]})");
  o.require(run_cli("concurrence --state " + dir.file("malformed.json").string()).exit_code == 2,
            "malformed file did not exit 2");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"basis validity", basis_validity},
      {"Pauli recovery", pauli_recovery},
      {"SWAP and Bell expansions", swap_and_bell},
      {"identity catalogue", identity_catalogue},
      {"map oracles", map_oracles},
      {"Choi round trip", choi_round_trip},
      {"state inversion", state_inversion_forms},
      {"concurrence", concurrence_values},
      {"CLI determinism and exit codes", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("criterion %zu %-32s %s  worst residual/tol %.3e  %.2f s%s%s\n", i + 1,
                criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL", o.worst, seconds_since(t0),
                o.note.empty() ? "" : "  ", o.note.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
