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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfkit/document.hpp"
#include "mfkit/orlov.hpp"

namespace mfkit {

// Outcome of one command. The JSON and text renderings are produced from
// the same fields, so they carry the same numbers.
class Report {
 public:
  explicit Report(std::string operation) : operation_(std::move(operation)) {}

  // Records the context and feeds (n, d) into the inputs digest.
  void set_context(const HypersurfaceContext& ctx);
  // Feeds the inputs digest (FNV-1a 64 over name/value pairs in call order).
  void add_input(std::string_view name, std::string_view canonical_text);
  void add_result(std::string key, Json value);
  // status is "pass", "fail" or "not applicable"; details is a JSON object.
  void add_verdict(std::string name, std::string status, Json details);
  void add_diagnostic(std::string text) { diagnostics_.push_back(std::move(text)); }
  void add_unchecked_hypotheses();

  const Json& results() const noexcept { return results_; }
  std::string digest() const;
  Json to_json() const;
  std::string to_text() const;

 private:
  std::string operation_;
  std::optional<HypersurfaceContext> context_;
  std::uint64_t hash_ = 14695981039346656037ULL;
  Json results_ = Json::object();
  Json verdicts_ = Json::array();
  std::vector<std::string> diagnostics_;
  std::vector<std::string> hypotheses_;
};

}  // namespace mfkit
