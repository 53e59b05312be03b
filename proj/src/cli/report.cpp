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

#include "mfkit/report.hpp"

#include <cstdio>
#include <sstream>

namespace mfkit {

namespace {

void fnv1a(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  h ^= 0xff;
  h *= 1099511628211ULL;
}

std::string text_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

void Report::set_context(const HypersurfaceContext& ctx) {
  context_ = ctx;
  add_input("context", std::to_string(ctx.n()) + "," + std::to_string(ctx.d()));
}

void Report::add_input(std::string_view name, std::string_view canonical_text) {
  fnv1a(hash_, name);
  fnv1a(hash_, canonical_text);
}

void Report::add_result(std::string key, Json value) { results_[std::move(key)] = std::move(value); }

void Report::add_verdict(std::string name, std::string status, Json details) {
  Json v{{"name", std::move(name)}, {"status", std::move(status)}};
  for (auto& [k, x] : details.items()) v[k] = x;
  verdicts_.push_back(std::move(v));
}

void Report::add_unchecked_hypotheses() { hypotheses_ = unchecked_hypotheses(); }

std::string Report::digest() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(hash_));
  return buf;
}

Json Report::to_json() const {
  Json j;
  j["operation"] = operation_;
  if (context_)
    j["context"] = Json{{"n", context_->n()}, {"d", context_->d()}, {"a", context_->a()}, {"e", context_->e()}};
  else
    j["context"] = nullptr;
  j["inputs_digest"] = digest();
  j["results"] = results_;
  j["verdicts"] = verdicts_;
  j["diagnostics"] = diagnostics_;
  j["unchecked_hypotheses"] = hypotheses_;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "operation: " << operation_ << "\n";
  if (context_)
    out << "context: n=" << context_->n() << " d=" << context_->d() << " a=" << context_->a()
        << " e=" << context_->e() << "\n";
  out << "inputs: " << digest() << "\n";
  out << "results:\n";
  for (const auto& [k, v] : results_.items()) out << "  " << k << ": " << text_value(v) << "\n";
  if (!verdicts_.empty()) {
    out << "verdicts:\n";
    for (const Json& v : verdicts_) {
      out << "  " << v["name"].get<std::string>() << ": " << v["status"].get<std::string>();
      std::string details;
      for (const auto& [k, x] : v.items()) {
        if (k == "name" || k == "status") continue;
        details += (details.empty() ? "" : ", ") + k + "=" + text_value(x);
      }
      if (!details.empty()) out << " (" << details << ")";
      out << "\n";
    }
  }
  if (!diagnostics_.empty()) {
    out << "diagnostics:\n";
    for (const auto& d : diagnostics_) out << "  - " << d << "\n";
  }
  if (!hypotheses_.empty()) {
    out << "unchecked hypotheses:\n";
    for (const auto& h : hypotheses_) out << "  - " << h << "\n";
  }
  return out.str();
}

}  // namespace mfkit
