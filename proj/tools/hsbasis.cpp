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

// hsbasis command-line front end.
//
// Exit codes: 0 success (or every identity passed), 1 at least one identity
// failed, 2 usage or input-format error.

#include <hsbasis/hsbasis.hpp>
#include <hsbasis/io.hpp>
#include <hsbasis/report.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hsbasis;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Resolves --basis {standard|gellmann|weyl|random|file:<path>}. Random bases
/// rotate the standard basis by a Haar unitary drawn from the seed.
MatrixBasis resolve_basis(const std::string& spec, std::optional<std::size_t> dim,
                          std::uint64_t seed) {
  constexpr std::string_view file_prefix = "file:";
  if (spec.rfind(file_prefix, 0) == 0) {
    MatrixBasis b = io::read_basis(spec.substr(file_prefix.size()));
    if (dim && *dim != b.dim()) {
      throw UsageError("--dim " + std::to_string(*dim) + " does not match basis file dimension " +
                       std::to_string(b.dim()));
    }
    return b;
  }
  if (!dim) throw UsageError("--dim is required for basis '" + spec + "'");
  if (*dim < 2) throw UsageError("--dim must be at least 2");
  if (spec == "random") {
    RandomSource rng(seed);
    return rotated_basis(standard_basis(*dim), {*dim, rng.haar_unitary(*dim * *dim)});
  }
  const auto kind = parse_basis_kind(spec);
  if (!kind || *kind == BasisKind::custom) throw UsageError("unknown basis '" + spec + "'");
  return make_basis(*kind, *dim);
}

std::vector<IdentityId> parse_ids(const std::string& list) {
  std::vector<IdentityId> ids;
  if (list.empty()) return {kAllIdentities.begin(), kAllIdentities.end()};
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    const auto id = parse_identity(name);
    if (!id) throw UsageError("unknown identity '" + name + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) throw UsageError("--ids selects no identities");
  return ids;
}

void emit(const std::string& path, const io::json& doc) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << '\n';
  } else {
    io::write_json_file(path, doc);
  }
}

std::optional<std::size_t> opt_dim(std::size_t dim) {
  return dim == 0 ? std::nullopt : std::optional<std::size_t>(dim);
}

Superoperator resolve_map(const std::string& spec, std::size_t d) {
  constexpr std::string_view file_prefix = "file:";
  if (spec.rfind(file_prefix, 0) == 0) {
    const ComplexMatrix m = io::read_matrix(spec.substr(file_prefix.size()));
    if (m.rows() != static_cast<Eigen::Index>(d * d) || m.cols() != m.rows()) {
      throw UsageError("superoperator file must be " + std::to_string(d * d) + "x" +
                       std::to_string(d * d));
    }
    return {d, m};
  }
  const MatrixBasis standard = standard_basis(d);
  MatrixAction action;
  if (spec == "identity") {
    action = [](const ComplexMatrix& a) { return a; };
  } else if (spec == "transpose") {
    action = [](const ComplexMatrix& a) { return ComplexMatrix(a.transpose()); };
  } else if (spec == "trace") {
    action = [](const ComplexMatrix& a) {
      return ComplexMatrix(a.trace() * ComplexMatrix::Identity(a.rows(), a.cols()));
    };
  } else if (spec == "inversion") {
    action = [](const ComplexMatrix& a) { return state_inversion_analytic(a); };
  } else {
    throw UsageError("unknown map '" + spec + "'");
  }
  return superop_from_action(action, standard);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal operator bases of the Hilbert-Schmidt space: expansions, maps and identity checks"};
  app.require_subcommand(1);

  // build
  std::string build_what;
  std::size_t build_dim = 0;
  std::string build_basis = "standard";
  std::string build_out;
  std::uint64_t build_seed = 1;
  auto* build = app.add_subcommand("build", "Build SWAP, the Bell projector or |+><+| from a basis expansion");
  build->add_option("what", build_what, "swap | bell | coherent")
      ->required()
      ->check(CLI::IsMember({"swap", "bell", "coherent"}));
  build->add_option("--dim", build_dim, "Local dimension d")->required();
  build->add_option("--basis", build_basis, "standard | gellmann | weyl | random | file:<path>");
  build->add_option("--seed", build_seed, "Seed for --basis random");
  build->add_option("--out", build_out, "Output matrix file (stdout if omitted)");

  // verify
  RunConfig verify_cfg;
  std::string verify_ids;
  bool verify_parallel = false;
  auto* verify = app.add_subcommand("verify", "Evaluate the identity catalogue in a basis");
  verify->add_option("--dim", verify_cfg.dim, "Local dimension d");
  verify->add_option("--basis", verify_cfg.basis, "standard | gellmann | weyl | random | file:<path>")
      ->required();
  verify->add_option("--ids", verify_ids, "Comma-separated identity names (default: all)");
  verify->add_option("--seed", verify_cfg.seed, "Seed for random operators and random bases");
  verify->add_option("--report", verify_cfg.report_format, "text | machine")
      ->check(CLI::IsMember({"text", "machine"}));
  verify->add_option("--out", verify_cfg.output_path, "Write the report to a file");
  verify->add_flag("--parallel", verify_parallel, "Evaluate identities concurrently");

  // transform
  std::string transform_from;
  std::string transform_to;
  std::size_t transform_dim = 0;
  std::string transform_out;
  std::uint64_t transform_seed = 1;
  auto* transform = app.add_subcommand("transform", "Coefficient matrix between two bases");
  transform->add_option("--from", transform_from, "Source basis")->required();
  transform->add_option("--to", transform_to, "Target basis")->required();
  transform->add_option("--dim", transform_dim, "Local dimension d");
  transform->add_option("--seed", transform_seed, "Seed for random bases");
  transform->add_option("--out", transform_out, "Output matrix file (stdout if omitted)");

  // map
  std::string map_what;
  std::size_t map_dim = 0;
  std::string map_basis = "standard";
  std::string map_input;
  std::string map_out;
  int map_party = 2;
  std::uint64_t map_seed = 1;
  auto* map = app.add_subcommand("map", "Apply a map through its basis expansion");
  map->add_option("what", map_what, "trace | transpose | pt | reshuffle | inversion")
      ->required()
      ->check(CLI::IsMember({"trace", "transpose", "pt", "reshuffle", "inversion"}));
  map->add_option("--dim", map_dim, "Local dimension d");
  map->add_option("--basis", map_basis, "Basis used for the expansion");
  map->add_option("--input", map_input, "Input matrix file")->required();
  map->add_option("--party", map_party, "Party for pt (1 or 2)")->check(CLI::Range(1, 2));
  map->add_option("--seed", map_seed, "Seed for --basis random");
  map->add_option("--out", map_out, "Output matrix file (stdout if omitted)");

  // choi
  std::string choi_map;
  std::size_t choi_dim = 0;
  std::string choi_basis = "standard";
  std::string choi_out;
  std::uint64_t choi_seed = 1;
  auto* choi = app.add_subcommand("choi", "Choi state of a linear map");
  choi->add_option("--map", choi_map, "identity | transpose | trace | inversion | file:<superoperator>")
      ->required();
  choi->add_option("--dim", choi_dim, "Local dimension d")->required();
  choi->add_option("--basis", choi_basis, "Basis used for the expansion");
  choi->add_option("--seed", choi_seed, "Seed for --basis random");
  choi->add_option("--out", choi_out, "Output matrix file (stdout if omitted)");

  // concurrence
  std::string state_path;
  auto* concurrence = app.add_subcommand("concurrence", "Squared concurrence of a pure two-party state");
  concurrence->add_option("--state", state_path, "Vector file of length d^2")->required();

  // decompose
  std::size_t dec_dim = 0;
  std::string dec_basis = "gellmann";
  std::string dec_input;
  std::string dec_out;
  std::uint64_t dec_seed = 1;
  auto* decompose = app.add_subcommand("decompose", "Bloch coefficients b_jk = Tr(g_jk^dagger A)");
  decompose->add_option("--dim", dec_dim, "Local dimension d");
  decompose->add_option("--basis", dec_basis, "Basis");
  decompose->add_option("--input", dec_input, "Input matrix file")->required();
  decompose->add_option("--seed", dec_seed, "Seed for --basis random");
  decompose->add_option("--out", dec_out, "Output vector file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) {
      const MatrixBasis b = resolve_basis(build_basis, opt_dim(build_dim), build_seed);
      ComplexMatrix result;
      if (build_what == "swap") {
        result = swap_expansion(b).matrix;
      } else if (build_what == "bell") {
        result = bell_expansion(b).matrix;
      } else {
        result = coherent_expansion(b) / std::pow(static_cast<double>(b.dim()), 1.5);
      }
      emit(build_out, io::to_json(result));
      return kExitOk;
    }

    if (*verify) {
      verify_cfg.ids = parse_ids(verify_ids);
      const MatrixBasis b = resolve_basis(verify_cfg.basis, opt_dim(verify_cfg.dim), verify_cfg.seed);
      verify_cfg.dim = b.dim();
      CatalogueOptions options{verify_cfg.seed, verify_parallel};
      const IdentityReport report = run_catalogue(b, verify_cfg.ids, options);
      const std::string text = verify_cfg.report_format == "machine"
                                   ? report_to_json(report, verify_cfg).dump(2) + "\n"
                                   : report_to_text(report, verify_cfg);
      if (verify_cfg.output_path.empty() || verify_cfg.output_path == "-") {
        std::cout << text;
      } else {
        std::ofstream out(verify_cfg.output_path, std::ios::binary);
        if (!out) throw io::FormatError(verify_cfg.output_path + ": cannot open file for writing");
        out << text;
      }
      return report.all_passed() ? kExitOk : kExitIdentityFailure;
    }

    if (*transform) {
      const auto dim = opt_dim(transform_dim);
      const MatrixBasis source = resolve_basis(transform_from, dim, transform_seed);
      const MatrixBasis target = resolve_basis(transform_to, source.dim(), transform_seed + 1);
      if (!is_valid_basis(source) || !is_valid_basis(target)) {
        throw UsageError("transform requires two orthogonal bases");
      }
      emit(transform_out, io::to_json(change_of_basis(target, source).coeffs));
      return kExitOk;
    }

    if (*map) {
      const ComplexMatrix input = io::read_matrix(map_input);
      const MatrixBasis b = resolve_basis(map_basis, opt_dim(map_dim), map_seed);
      const std::size_t d = b.dim();
      const bool single = input.rows() == static_cast<Eigen::Index>(d) && input.cols() == input.rows();
      const bool bipartite =
          input.rows() == static_cast<Eigen::Index>(d * d) && input.cols() == input.rows();
      ComplexMatrix result;
      if (map_what == "trace" || map_what == "transpose") {
        if (!single) throw UsageError("map " + map_what + " expects a " + std::to_string(d) + "x" + std::to_string(d) + " input");
        result = map_what == "trace" ? trace_map_apply(input, b) : transpose_map_apply(input, b);
      } else if (map_what == "pt" || map_what == "reshuffle") {
        if (!bipartite) throw UsageError("map " + map_what + " expects a d^2 x d^2 input");
        const TwoPartyOperator op{d, input};
        result = map_what == "pt"
                     ? partial_transpose_map(op, map_party == 1 ? Party::first : Party::second, b).matrix
                     : reshuffle_map(op, b).matrix;
      } else {
        if (single) {
          result = state_inversion(input, b);
        } else if (bipartite) {
          result = state_inversion_two({d, input}, b).matrix;
        } else {
          throw UsageError("map inversion expects a d x d or d^2 x d^2 input");
        }
      }
      emit(map_out, io::to_json(result));
      return kExitOk;
    }

    if (*choi) {
      const MatrixBasis b = resolve_basis(choi_basis, opt_dim(choi_dim), choi_seed);
      const Superoperator op = resolve_map(choi_map, b.dim());
      emit(choi_out, io::to_json(choi_state(op, b).matrix));
      return kExitOk;
    }

    if (*concurrence) {
      const ComplexVector psi = io::read_vector(state_path);
      std::cout << std::fixed << std::setprecision(10) << concurrence_squared(psi) << '\n';
      return kExitOk;
    }

    if (*decompose) {
      const ComplexMatrix input = io::read_matrix(dec_input);
      const MatrixBasis b = resolve_basis(dec_basis, opt_dim(dec_dim), dec_seed);
      emit(dec_out, io::to_json(bloch_decompose(input, b).coeffs));
      return kExitOk;
    }
  } catch (const io::FormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
