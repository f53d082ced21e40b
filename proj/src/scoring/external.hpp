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

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "common/error.hpp"
#include "scoring/scorer.hpp"

namespace certkit::scoring {

enum class ExternalFailure { kUnreachable, kTimeout, kMalformedResponse, kIdMismatch, kClosed };
const char* to_string(ExternalFailure f);

class ExternalError : public Error {
 public:
  ExternalError(ExternalFailure failure, const std::string& message, std::string payload = {})
      : Error(ErrorKind::kExternal, std::string(to_string(failure)) + ": " + message),
        failure_(failure),
        payload_(std::move(payload)) {}

  ExternalFailure failure() const { return failure_; }
  // The offending line (response) or request, when there is one.
  const std::string& payload() const { return payload_; }

 private:
  ExternalFailure failure_;
  std::string payload_;
};

// A bidirectional stream of newline-terminated UTF-8 lines.
class LineChannel {
 public:
  virtual ~LineChannel() = default;
  virtual void send_line(std::string_view line) = 0;
  // nullopt when no full line arrives within `timeout`; throws kClosed on EOF.
  virtual std::optional<std::string> receive_line(std::chrono::milliseconds timeout) = 0;
};

// Runs `command` through /bin/sh and talks to its stdin/stdout.
std::unique_ptr<LineChannel> open_subprocess(const std::string& command);
// Connects to host:port.
std::unique_ptr<LineChannel> open_tcp(const std::string& host, int port);
// "tcp://host:port" opens a socket; anything else is a shell command.
std::unique_ptr<LineChannel> open_endpoint(const std::string& endpoint);

struct ExternalOptions {
  std::size_t max_in_flight = 8;
  std::chrono::milliseconds timeout{30000};  // per finding, from the time it was sent
  std::string endpoint_label = "external";
};

struct ExternalResult {
  std::vector<CertaintyScore> scores;  // input order
  std::vector<std::string> warnings;
};

// {"id":"...","text":"..."}
std::string encode_request(std::string_view id, std::string_view text);

// Validates one response line. Out-of-range certainty is clamped and noted
// in `warning`; anything else off-schema throws kMalformedResponse.
CertaintyScore decode_response(const std::string& line, std::string* warning);

// Request ids are the finding ids, which must be unique. Responses may
// arrive in any order; unknown or repeated ids are an error.
ExternalResult score_external(const std::vector<corpus::ScientificFinding>& findings,
                              LineChannel& channel, const ExternalOptions& options = {});

}  // namespace certkit::scoring
