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

#ifndef HSBASIS_IO_HPP
#define HSBASIS_IO_HPP

// JSON file formats:
//   matrix: {"rows": r, "cols": c, "entries": [[re, im], ...]}  (row-major)
//   basis:  {"d": d, "kind": "standard|gellmann|weyl|custom", "elements": [matrix, ...]}
//   vector: a matrix document with cols == 1 (or rows == 1)

#include <hsbasis/bases.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hsbasis::io {

using json = nlohmann::json;

/// Malformed input document. The message names the offending field.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const json& field(const json& doc, const char* name, const std::string& where) {
  if (!doc.is_object()) throw FormatError(where + ": expected an object");
  auto it = doc.find(name);
  if (it == doc.end()) throw FormatError(where + ": missing field \"" + name + "\"");
  return *it;
}

inline std::size_t positive_int(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw FormatError(where + ": expected a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace detail

inline json to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline json to_json(const ComplexVector& v) {
  return to_json(ComplexMatrix(Eigen::Map<const ComplexMatrix>(v.data(), v.size(), 1)));
}

inline ComplexMatrix matrix_from_json(const json& doc, const std::string& where = "matrix") {
  const std::size_t rows = detail::positive_int(detail::field(doc, "rows", where), where + ".rows");
  const std::size_t cols = detail::positive_int(detail::field(doc, "cols", where), where + ".cols");
  const json& entries = detail::field(doc, "entries", where);
  if (!entries.is_array()) throw FormatError(where + ".entries: expected an array");
  if (entries.size() != rows * cols) {
    throw FormatError(where + ".entries: expected " + std::to_string(rows * cols) +
                      " entries for a " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " matrix, got " + std::to_string(entries.size()));
  }
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& e = entries[i];
    const std::string at = where + ".entries[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw FormatError(at + ": expected [re, im]");
    }
    const Complex z(e[0].get<double>(), e[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw FormatError(at + ": non-finite value");
    m.data()[i] = z;
  }
  return m;
}

inline ComplexVector vector_from_json(const json& doc, const std::string& where = "vector") {
  const ComplexMatrix m = matrix_from_json(doc, where);
  if (m.cols() != 1 && m.rows() != 1) {
    throw FormatError(where + ": expected a single row or column, got " +
                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

inline json to_json(const MatrixBasis& b) {
  json elements = json::array();
  for (const auto& g : b) elements.push_back(to_json(g));
  return json{{"d", b.dim()}, {"kind", std::string(to_string(b.kind()))}, {"elements", std::move(elements)}};
}

inline MatrixBasis basis_from_json(const json& doc, const std::string& where = "basis") {
  const std::size_t d = detail::positive_int(detail::field(doc, "d", where), where + ".d");
  const json& kind_field = detail::field(doc, "kind", where);
  if (!kind_field.is_string()) throw FormatError(where + ".kind: expected a string");
  const auto kind = parse_basis_kind(kind_field.get<std::string>());
  if (!kind) throw FormatError(where + ".kind: unknown basis kind \"" + kind_field.get<std::string>() + "\"");
  const json& elements = detail::field(doc, "elements", where);
  if (!elements.is_array()) throw FormatError(where + ".elements: expected an array");
  if (elements.size() != d * d) {
    throw FormatError(where + ".elements: expected " + std::to_string(d * d) + " elements, got " +
                      std::to_string(elements.size()));
  }
  std::vector<ComplexMatrix> mats;
  mats.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string at = where + ".elements[" + std::to_string(i) + "]";
    ComplexMatrix g = matrix_from_json(elements[i], at);
    if (g.rows() != static_cast<Eigen::Index>(d) || g.cols() != static_cast<Eigen::Index>(d)) {
      throw FormatError(at + ": expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
    }
    mats.push_back(std::move(g));
  }
  return {d, *kind, std::move(mats)};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": invalid JSON (" + e.what() + ")");
  }
}

inline void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw FormatError(path + ": cannot open file for writing");
  out << doc.dump(2) << '\n';
}

inline ComplexMatrix read_matrix(const std::string& path) {
  return matrix_from_json(read_json_file(path), path);
}
inline ComplexVector read_vector(const std::string& path) {
  return vector_from_json(read_json_file(path), path);
}
inline MatrixBasis read_basis(const std::string& path) {
  return basis_from_json(read_json_file(path), path);
}

/// Rounds to 10 significant digits so printed reports are stable.
inline double round_significant(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9e", x);
  return std::strtod(buf, nullptr);
}

}  // namespace hsbasis::io

#endif  // HSBASIS_IO_HPP
