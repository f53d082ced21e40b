// Copyright 2026 The certkit Authors.
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

#include <stdexcept>
#include <string>

namespace certkit {

enum class ErrorKind {
  kUsage,     // bad arguments or configuration
  kData,      // malformed or insufficient input data
  kNumeric,   // degenerate statistics (zero variance, rank deficiency)
  kExternal,  // external scorer transport/protocol failure
  kIo,        // unreadable or unwritable file
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error usage_error(const std::string& m) { return {ErrorKind::kUsage, m}; }
inline Error data_error(const std::string& m) { return {ErrorKind::kData, m}; }
inline Error numeric_error(const std::string& m) { return {ErrorKind::kNumeric, m}; }
inline Error io_error(const std::string& m) { return {ErrorKind::kIo, m}; }

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kData: return "data";
    case ErrorKind::kNumeric: return "numeric";
    case ErrorKind::kExternal: return "external";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

}  // namespace certkit
