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

#include <hsbasis/hsbasis.hpp>
#include <hsbasis/io.hpp>
#include <hsbasis/report.hpp>

#include "gtest/gtest.h"
#include "process.hpp"

using namespace hsbasis;
using hsbasis::testing::run_cli;
using hsbasis::testing::ScratchDir;

TEST(io, matrix_round_trip_is_exact) {
  RandomSource rng(80);
  const ComplexMatrix m = rng.matrix(3, 4);
  EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
  const io::json reparsed = io::json::parse(io::to_json(m).dump());
  EXPECT_EQ(io::matrix_from_json(reparsed), m);
}

TEST(io, basis_round_trip) {
  const MatrixBasis b = weyl_basis(3);
  const MatrixBasis back = io::basis_from_json(io::to_json(b));
  EXPECT_EQ(back.kind(), BasisKind::weyl);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(back[i], b[i]);
}

TEST(io, vector_accepts_row_or_column) {
  const ComplexVector v = RandomSource(81).unit_vector(4);
  EXPECT_EQ(io::vector_from_json(io::to_json(v)), v);
  EXPECT_EQ(io::vector_from_json(io::to_json(ComplexMatrix(v.transpose()))), v);
  EXPECT_THROW(io::vector_from_json(io::to_json(identity(2))), io::FormatError);
}

TEST(io, malformed_documents) {
  using io::json;
  EXPECT_THROW(io::matrix_from_json(json::parse(R"({"rows":2,"cols":2})")), io::FormatError);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[[1,0]]})")), io::FormatError);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[[1]]})")), io::FormatError);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[["a",0]]})")), io::FormatError);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"({"rows":0,"cols":1,"entries":[]})")), io::FormatError);
  EXPECT_THROW(io::basis_from_json(json::parse(R"({"d":2,"kind":"nope","elements":[]})")), io::FormatError);
  EXPECT_THROW(io::basis_from_json(json::parse(R"({"d":2,"kind":"custom","elements":[]})")), io::FormatError);
  EXPECT_THROW(io::read_json_file("/nonexistent/hsbasis.json"), io::FormatError);
}

TEST(io, round_significant_keeps_ten_digits) {
  EXPECT_EQ(io::round_significant(0.0), 0.0);
  EXPECT_DOUBLE_EQ(io::round_significant(1.23456789012345e-11), 1.234567890e-11);
  EXPECT_DOUBLE_EQ(io::round_significant(-2.0 / 3.0), -0.6666666667);
}

TEST(report, machine_schema) {
  RunConfig cfg;
  cfg.dim = 2;
  cfg.basis = "weyl";
  cfg.ids = {IdentityId::swap_expansion};
  const auto rep = run_catalogue(weyl_basis(2), cfg.ids);
  const io::json doc = report_to_json(rep, cfg);
  EXPECT_EQ(doc["schema"], kReportSchema);
  EXPECT_EQ(doc["config"]["basis"], "weyl");
  EXPECT_EQ(doc["results"][0]["id"], "SWAP_EXPANSION");
  EXPECT_EQ(doc["results"][0]["verdict"], "pass");
  EXPECT_EQ(doc["all_passed"], true);
  EXPECT_NE(report_to_text(rep, cfg).find("1/1 identities passed"), std::string::npos);
}

TEST(cli, build_swap_matches_library) {
  const auto r = run_cli("build swap --dim 3 --basis gellmann");
  ASSERT_EQ(r.exit_code, 0);
  const ComplexMatrix m = io::matrix_from_json(io::json::parse(r.out));
  EXPECT_LE(residual(m, swap_operator(3).matrix), tolerance(9));
}

TEST(cli, build_coherent_is_plus_projector) {
  const auto r = run_cli("build coherent --dim 4 --basis weyl");
  ASSERT_EQ(r.exit_code, 0);
  const ComplexVector plus = coherent_state(4);
  EXPECT_LE(residual(io::matrix_from_json(io::json::parse(r.out)), plus * plus.adjoint()), tolerance(4));
}

TEST(cli, transform_and_decompose) {
  ScratchDir dir("cli-transform");
  const auto t = run_cli("transform --from standard --to gellmann --dim 2");
  ASSERT_EQ(t.exit_code, 0);
  EXPECT_LE(residual(io::matrix_from_json(io::json::parse(t.out)),
                     change_of_basis(gellmann_basis(2), standard_basis(2)).coeffs),
            0.0);

  const ComplexMatrix rho = RandomSource(82).density(3);
  io::write_json_file(dir.file("rho.json").string(), io::to_json(rho));
  const auto dec = run_cli("decompose --dim 3 --input " + dir.file("rho.json").string());
  ASSERT_EQ(dec.exit_code, 0);
  const ComplexVector coeffs = io::vector_from_json(io::json::parse(dec.out));
  EXPECT_LE((coeffs - bloch_decompose(rho, gellmann_basis(3)).coeffs).norm(), 0.0);
}

TEST(cli, map_subcommands) {
  ScratchDir dir("cli-map");
  RandomSource rng(83);
  const ComplexMatrix a = rng.hermitian(3);
  const ComplexMatrix m = rng.hermitian(9);
  io::write_json_file(dir.file("a.json").string(), io::to_json(a));
  io::write_json_file(dir.file("m.json").string(), io::to_json(m));
  auto load = [](const std::string& out) { return io::matrix_from_json(io::json::parse(out)); };

  auto r = run_cli("map transpose --basis weyl --dim 3 --input " + dir.file("a.json").string());
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_LE(residual(load(r.out), a.transpose()), tolerance(3));

  r = run_cli("map pt --party 1 --basis gellmann --dim 3 --input " + dir.file("m.json").string());
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_LE(residual(load(r.out), partial_transpose_raw(m, Party::first, 3)), tolerance(9));

  r = run_cli("map reshuffle --basis standard --dim 3 --input " + dir.file("m.json").string());
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_LE(residual(load(r.out), reshuffle_raw(m, 3)), tolerance(9));

  r = run_cli("map inversion --basis weyl --dim 3 --input " + dir.file("m.json").string());
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_LE(residual(load(r.out), state_inversion_two_analytic(m, 3)), tolerance(9));

  r = run_cli("map trace --basis weyl --dim 3 --input " + dir.file("m.json").string());
  EXPECT_EQ(r.exit_code, 2);
}

TEST(cli, choi_and_concurrence) {
  ScratchDir dir("cli-choi");
  const auto c = run_cli("choi --map identity --dim 3");
  ASSERT_EQ(c.exit_code, 0);
  EXPECT_LE(residual(io::matrix_from_json(io::json::parse(c.out)), bell_projector(3).matrix), 1e-12 * 9);

  io::write_json_file(dir.file("bell.json").string(), io::to_json(bell_state(3)));
  const auto k = run_cli("concurrence --state " + dir.file("bell.json").string());
  ASSERT_EQ(k.exit_code, 0);
  EXPECT_EQ(k.out, "1.3333333333\n");
}

TEST(cli, verify_exit_codes) {
  ScratchDir dir("cli-verify");
  EXPECT_EQ(run_cli("verify --dim 2 --basis weyl").exit_code, 0);
  EXPECT_EQ(run_cli("verify --dim 2 --basis weyl --ids swap_expansion,bell_expansion --report machine").exit_code, 0);

  auto elements = gellmann_basis(2).elements();
  elements[3] *= 2.0;
  io::write_json_file(dir.file("bad.json").string(), io::to_json(MatrixBasis(2, BasisKind::custom, elements)));
  EXPECT_EQ(run_cli("verify --basis file:" + dir.file("bad.json").string()).exit_code, 1);

  hsbasis::testing::write_text(dir.file("broken.json"), "{\"d\": 2, \"kind\": \"custom\", \"elements\": [");
  EXPECT_EQ(run_cli("verify --basis file:" + dir.file("broken.json").string()).exit_code, 2);
  EXPECT_EQ(run_cli("verify --dim 2 --basis nonsense").exit_code, 2);
  EXPECT_EQ(run_cli("verify --dim 2 --ids NOPE").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
}

TEST(cli, machine_report_is_deterministic) {
  ScratchDir dir("cli-det");
  const std::string args = "verify --dim 3 --basis random --seed 9 --report machine --out ";
  ASSERT_EQ(run_cli(args + dir.file("a.json").string()).exit_code, 0);
  ASSERT_EQ(run_cli(args + dir.file("b.json").string() + " --parallel").exit_code, 0);
  const std::string a = hsbasis::testing::slurp(dir.file("a.json"));
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, hsbasis::testing::slurp(dir.file("b.json")));
}
