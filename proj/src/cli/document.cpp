// Copyright 2026 The mfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mfkit/document.hpp"

#include <fstream>
#include <sstream>

namespace mfkit {

namespace {

const char* kModule = "cli";

[[noreturn]] void schema_error(const std::string& location, const std::string& message) {
  throw ValidationError(kModule, Diagnostics{{location, message}});
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer");
  return j.get<long long>();
}

int small_integer(const Json& j, const std::string& where) {
  const long long v = integer(j, where);
  if (v < -1000000000LL || v > 1000000000LL) schema_error(where, "integer out of range");
  return static_cast<int>(v);
}

Count count_value(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    schema_error(where, "expected a nonnegative integer");
  return j.get<Count>();
}

void check_version(const Json& j) {
  const Json& v = member(j, "schema_version", "document");
  if (!v.is_number_integer() || v.get<long long>() != kSchemaVersion)
    schema_error("schema_version", "unsupported schema version " + v.dump() + " (expected " +
                                       std::to_string(kSchemaVersion) + ")");
}

std::vector<int> degree_list(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(small_integer(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

Polynomial polynomial(const Json& j, const Field& field, std::size_t nvars, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a polynomial string");
  try {
    return parse_polynomial(j.get<std::string>(), field, nvars);
  } catch (const ParseError& e) {
    schema_error(where, e.what());
  }
}

std::vector<std::vector<Polynomial>> poly_grid(const Json& j, const Field& field, std::size_t nvars,
                                               const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of rows");
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) schema_error(row_where, "expected an array of polynomial strings");
    std::vector<Polynomial> row;
    for (std::size_t c = 0; c < j[r].size(); ++c)
      row.push_back(polynomial(j[r][c], field, nvars, row_where + "[" + std::to_string(c) + "]"));
    out.push_back(std::move(row));
  }
  return out;
}

Json grid_json(const HomogeneousMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Field field_from_name(std::string_view type, std::uint64_t p) {
  if (type == "Q") return Field::rationals();
  if (type == "Qi") return Field::gaussian_rationals();
  if (type == "Fp") {
    if (p == 0) throw DomainError(kModule, "field Fp needs a prime p");
    return Field::prime(p);
  }
  throw DomainError(kModule, "unknown field type \"" + std::string(type) + "\" (expected Q, Qi or Fp)");
}

Json field_to_json(const Field& field) {
  switch (field.kind()) {
    case FieldKind::Rational:
      return Json{{"type", "Q"}};
    case FieldKind::GaussianRational:
      return Json{{"type", "Qi"}};
    case FieldKind::Prime:
      return Json{{"type", "Fp"}, {"p", field.modulus()}};
  }
  return Json();
}

Field field_from_json(const Json& j) {
  const Json& type = member(j, "type", "field");
  if (!type.is_string()) schema_error("field.type", "expected a string");
  std::uint64_t p = 0;
  if (type.get<std::string>() == "Fp") {
    const Json& pj = member(j, "p", "field");
    if (!pj.is_number_unsigned() && !pj.is_number_integer()) schema_error("field.p", "expected a prime");
    const long long v = pj.get<long long>();
    if (v < 2) schema_error("field.p", "expected a prime");
    p = static_cast<std::uint64_t>(v);
  }
  try {
    return field_from_name(type.get<std::string>(), p);
  } catch (const DomainError& e) {
    schema_error("field", e.what());
  }
}

Json mf_to_json(const MatrixFactorization& F) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["field"] = field_to_json(F.field());
  j["nvars"] = F.nvars();
  j["f"] = F.f().to_string();
  j["d"] = F.degree();
  j["F0_degrees"] = std::vector<int>(F.f0().begin(), F.f0().end());
  j["F1_degrees"] = std::vector<int>(F.f1().begin(), F.f1().end());
  j["s0"] = grid_json(F.s0());
  j["s1"] = grid_json(F.s1());
  return j;
}

MfCandidate mf_candidate_from_json(const Json& j) {
  check_version(j);
  const Field field = field_from_json(member(j, "field", "document"));
  const long long nv = integer(member(j, "nvars", "document"), "nvars");
  if (nv < 1 || nv > 64) schema_error("nvars", "expected 1 <= nvars <= 64");
  const auto nvars = static_cast<std::size_t>(nv);
  MfCandidate c{polynomial(member(j, "f", "document"), field, nvars, "f"),
                degree_list(member(j, "F0_degrees", "document"), "F0_degrees"),
                degree_list(member(j, "F1_degrees", "document"), "F1_degrees"),
                poly_grid(member(j, "s0", "document"), field, nvars, "s0"),
                poly_grid(member(j, "s1", "document"), field, nvars, "s1")};
  const int d = small_integer(member(j, "d", "document"), "d");
  const DegreeInfo info = c.f.degree_info();
  if (!c.f.is_zero() && info.homogeneous && info.degree != d)
    schema_error("d", "d = " + std::to_string(d) + " but f has degree " + std::to_string(*info.degree));
  return c;
}

Json betti_to_json(const BettiTable& b) {
  Json cells = Json::array();
  for (const auto& [key, count] : b.entries()) cells.push_back(Json{{"i", key.first}, {"j", key.second}, {"count", count}});
  return Json{{"schema_version", kSchemaVersion}, {"betti", std::move(cells)}};
}

BettiTable betti_from_json(const Json& j) {
  check_version(j);
  const Json& cells = member(j, "betti", "document");
  if (!cells.is_array()) schema_error("betti", "expected an array");
  BettiTable b;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::string where = "betti[" + std::to_string(k) + "]";
    const int i = small_integer(member(cells[k], "i", where), where + ".i");
    if (i != 0 && i != 1) schema_error(where + ".i", "expected 0 or 1");
    b.add(i, small_integer(member(cells[k], "j", where), where + ".j"),
          count_value(member(cells[k], "count", where), where + ".count"));
  }
  return b;
}

Json table_to_json(const CohomologyTable& t) {
  Json cells = Json::array();
  for (const auto& [key, count] : t.entries()) cells.push_back(Json{{"p", key.first}, {"h", key.second}, {"count", count}});
  return Json{{"schema_version", kSchemaVersion}, {"n", t.n()}, {"table", std::move(cells)}};
}

CohomologyTable table_from_json(const Json& j) {
  check_version(j);
  const int n = small_integer(member(j, "n", "document"), "n");
  if (n < 1) schema_error("n", "expected n >= 1");
  const Json& cells = member(j, "table", "document");
  if (!cells.is_array()) schema_error("table", "expected an array");
  CohomologyTable t(n);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::string where = "table[" + std::to_string(k) + "]";
    t.add(small_integer(member(cells[k], "p", where), where + ".p"),
          small_integer(member(cells[k], "h", where), where + ".h"),
          count_value(member(cells[k], "count", where), where + ".count"));
  }
  return t;
}

Json parse_json(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema_error(std::string(origin), std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(kModule, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path.string());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(kModule, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(kModule, "failed writing " + path.string());
}

}  // namespace mfkit
