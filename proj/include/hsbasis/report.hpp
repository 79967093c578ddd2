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

#ifndef HSBASIS_REPORT_HPP
#define HSBASIS_REPORT_HPP

#include <hsbasis/identities.hpp>
#include <hsbasis/io.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace hsbasis {

/// Everything that determines a verify run.
struct RunConfig {
  std::size_t dim = 0;
  std::string basis;
  std::vector<IdentityId> ids;
  std::uint64_t seed = 1;
  std::string report_format = "text";
  std::string output_path;
};

inline constexpr int kReportSchema = 1;

inline io::json report_to_json(const IdentityReport& report, const RunConfig& config) {
  io::json ids = io::json::array();
  for (IdentityId id : config.ids) ids.push_back(std::string(identity_name(id)));
  io::json results = io::json::array();
  for (const auto& r : report.results) {
    results.push_back(io::json{{"id", std::string(identity_name(r.id))},
                               {"residual", io::round_significant(r.residual)},
                               {"tolerance", io::round_significant(r.tolerance)},
                               {"verdict", r.passed() ? "pass" : "fail"}});
  }
  return io::json{{"schema", kReportSchema},
                  {"config",
                   {{"dim", config.dim}, {"basis", config.basis}, {"seed", config.seed}, {"ids", ids}}},
                  {"results", std::move(results)},
                  {"all_passed", report.all_passed()}};
}

inline std::string report_to_text(const IdentityReport& report, const RunConfig& config) {
  std::ostringstream out;
  out << "basis " << config.basis << ", d = " << config.dim << ", seed " << config.seed << '\n';
  std::size_t passed = 0;
  for (const auto& r : report.results) {
    out << std::left << std::setw(22) << identity_name(r.id) << ' ' << std::setw(5)
        << (r.passed() ? "pass" : "FAIL") << "  residual " << std::scientific
        << std::setprecision(9) << r.residual << "  tol " << r.tolerance << "   "
        << identity_lhs(r.id) << '\n';
    if (r.passed()) ++passed;
  }
  out << passed << '/' << report.results.size() << " identities passed\n";
  return out.str();
}

}  // namespace hsbasis

#endif  // HSBASIS_REPORT_HPP
