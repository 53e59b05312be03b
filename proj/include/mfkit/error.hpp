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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfkit {

// Base for every error raised by the library. Messages are prefixed with the
// module that raised them, e.g. "algebra: field mismatch".
class Error : public std::runtime_error {
 public:
  Error(const std::string& module, const std::string& message)
      : std::runtime_error(module + ": " + message), module_(module) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

// Operands live in different fields or polynomial rings.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// Arithmetic or mathematical precondition violated (division by zero,
// a > 0 where a <= 0 is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("algebra", "parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct Diagnostic {
  std::string location;
  std::string message;

  std::string to_string() const { return location.empty() ? message : location + ": " + message; }
};

using Diagnostics = std::vector<Diagnostic>;

// Carries the diagnostics of a failed validation.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& module, Diagnostics diagnostics)
      : Error(module, summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

  const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

 private:
  static std::string summarize(const Diagnostics& diagnostics) {
    if (diagnostics.empty()) return "validation failed";
    std::string out = diagnostics.front().to_string();
    if (diagnostics.size() > 1) out += " (+" + std::to_string(diagnostics.size() - 1) + " more)";
    return out;
  }

  Diagnostics diagnostics_;
};

}  // namespace mfkit
