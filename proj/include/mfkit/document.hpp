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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mfkit/mf.hpp"
#include "mfkit/orlov.hpp"
#include "mfkit/polynomial.hpp"

// JSON file formats. Polynomials are strings in the parser's grammar.
//
//   factorization: {"schema_version": 1, "field": {"type": "Q" | "Qi" | "Fp", "p": 13},
//                   "nvars": 4, "f": "...", "d": 4, "F0_degrees": [...], "F1_degrees": [...],
//                   "s0": [["..."]], "s1": [["..."]]}
//   betti table:   {"schema_version": 1, "betti": [{"i": 1, "j": 0, "count": 2}, ...]}
//   cohomology:    {"schema_version": 1, "n": 3, "table": [{"p": 0, "h": 0, "count": 2}, ...]}
//
// Schema problems raise ValidationError from module "cli".
namespace mfkit {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Field field_from_name(std::string_view type, std::uint64_t p = 0);
Json field_to_json(const Field& field);
Field field_from_json(const Json& j);

Json mf_to_json(const MatrixFactorization& F);
MfCandidate mf_candidate_from_json(const Json& j);

Json betti_to_json(const BettiTable& b);
BettiTable betti_from_json(const Json& j);

Json table_to_json(const CohomologyTable& t);
CohomologyTable table_from_json(const Json& j);

// Parses text as JSON; throws ValidationError on malformed input.
Json parse_json(std::string_view text, std::string_view origin);
// Reads and parses a file; throws Error("cli", ...) if it cannot be read.
Json read_json_file(const std::filesystem::path& path);
// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace mfkit
