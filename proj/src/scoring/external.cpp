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

#include "scoring/external.hpp"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netdb.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <map>
#include <set>

namespace certkit::scoring {

const char* to_string(ExternalFailure f) {
  switch (f) {
    case ExternalFailure::kUnreachable: return "unreachable";
    case ExternalFailure::kTimeout: return "timeout";
    case ExternalFailure::kMalformedResponse: return "malformed_response";
    case ExternalFailure::kIdMismatch: return "id_mismatch";
    case ExternalFailure::kClosed: return "closed";
  }
  return "unknown";
}

namespace {

// Buffered line I/O over a pair of file descriptors.
class FdLineChannel : public LineChannel {
 public:
  FdLineChannel(int read_fd, int write_fd) : read_fd_(read_fd), write_fd_(write_fd) {}

  void send_line(std::string_view line) override {
    std::string data(line);
    data.push_back('\n');
    std::size_t off = 0;
    while (off < data.size()) {
      const ssize_t n = write_bytes(data.data() + off, data.size() - off);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw ExternalError(ExternalFailure::kClosed, std::string("write failed: ") + std::strerror(errno),
                            std::string(line));
      }
      off += static_cast<std::size_t>(n);
    }
  }

  std::optional<std::string> receive_line(std::chrono::milliseconds timeout) override {
    const auto deadline = std::chrono::steady_clock::now() + timeout;
    while (true) {
      if (auto nl = buffer_.find('\n'); nl != std::string::npos) {
        std::string line = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
      }
      if (eof_) throw ExternalError(ExternalFailure::kClosed, "endpoint closed the stream", buffer_);
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - std::chrono::steady_clock::now());
      if (left.count() <= 0) return std::nullopt;
      pollfd pfd{read_fd_, POLLIN, 0};
      const int rc = ::poll(&pfd, 1, static_cast<int>(left.count()));
      if (rc < 0) {
        if (errno == EINTR) continue;
        throw ExternalError(ExternalFailure::kClosed, std::string("poll failed: ") + std::strerror(errno));
      }
      if (rc == 0) return std::nullopt;
      char chunk[4096];
      const ssize_t n = ::read(read_fd_, chunk, sizeof chunk);
      if (n < 0) {
        if (errno == EINTR || errno == EAGAIN) continue;
        throw ExternalError(ExternalFailure::kClosed, std::string("read failed: ") + std::strerror(errno));
      }
      if (n == 0) {
        eof_ = true;
        continue;
      }
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }

 protected:
  virtual ssize_t write_bytes(const char* data, std::size_t size) {
    return ::write(write_fd_, data, size);
  }

  int read_fd_;
  int write_fd_;

 private:
  std::string buffer_;
  bool eof_ = false;
};

class SubprocessChannel final : public FdLineChannel {
 public:
  SubprocessChannel(int read_fd, int write_fd, pid_t pid) : FdLineChannel(read_fd, write_fd), pid_(pid) {}

  ~SubprocessChannel() override {
    ::close(write_fd_);
    // Give the child a moment to exit on EOF before forcing it.
    for (int i = 0; i < 50; ++i) {
      int status = 0;
      if (::waitpid(pid_, &status, WNOHANG) == pid_) {
        ::close(read_fd_);
        return;
      }
      ::usleep(10000);
    }
    ::kill(pid_, SIGKILL);
    int status = 0;
    ::waitpid(pid_, &status, 0);
    ::close(read_fd_);
  }

 private:
  pid_t pid_;
};

class TcpChannel final : public FdLineChannel {
 public:
  explicit TcpChannel(int fd) : FdLineChannel(fd, fd) {}
  ~TcpChannel() override { ::close(read_fd_); }

 protected:
  ssize_t write_bytes(const char* data, std::size_t size) override {
    return ::send(write_fd_, data, size, MSG_NOSIGNAL);
  }
};

}  // namespace

std::unique_ptr<LineChannel> open_subprocess(const std::string& command) {
  // A child that exits early must surface as a write error, not kill us.
  ::signal(SIGPIPE, SIG_IGN);
  int to_child[2], from_child[2];
  if (::pipe(to_child) != 0) throw ExternalError(ExternalFailure::kUnreachable, "pipe() failed");
  if (::pipe(from_child) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw ExternalError(ExternalFailure::kUnreachable, "pipe() failed");
  }
  const pid_t pid = ::fork();
  if (pid < 0) throw ExternalError(ExternalFailure::kUnreachable, "fork() failed", command);
  if (pid == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    ::close(to_child[0]);
    ::close(to_child[1]);
    ::close(from_child[0]);
    ::close(from_child[1]);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(to_child[0]);
  ::close(from_child[1]);
  ::fcntl(to_child[1], F_SETFD, FD_CLOEXEC);
  ::fcntl(from_child[0], F_SETFD, FD_CLOEXEC);
  return std::make_unique<SubprocessChannel>(from_child[0], to_child[1], pid);
}

std::unique_ptr<LineChannel> open_tcp(const std::string& host, int port) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  const std::string port_str = std::to_string(port);
  if (::getaddrinfo(host.c_str(), port_str.c_str(), &hints, &res) != 0 || !res)
    throw ExternalError(ExternalFailure::kUnreachable, "cannot resolve " + host);
  int fd = -1;
  for (addrinfo* ai = res; ai; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype | SOCK_CLOEXEC, ai->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(res);
  if (fd < 0)
    throw ExternalError(ExternalFailure::kUnreachable,
                        "cannot connect to " + host + ":" + port_str);
  return std::make_unique<TcpChannel>(fd);
}

std::unique_ptr<LineChannel> open_endpoint(const std::string& endpoint) {
  constexpr std::string_view kTcp = "tcp://";
  if (endpoint.rfind(kTcp, 0) == 0) {
    const std::string rest = endpoint.substr(kTcp.size());
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw usage_error("tcp endpoint needs host:port");
    int port = 0;
    try {
      port = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw usage_error("invalid port in " + endpoint);
    }
    return open_tcp(rest.substr(0, colon), port);
  }
  return open_subprocess(endpoint);
}

std::string encode_request(std::string_view id, std::string_view text) {
  nlohmann::ordered_json j;
  j["id"] = std::string(id);
  j["text"] = std::string(text);
  return j.dump();
}

CertaintyScore decode_response(const std::string& line, std::string* warning) {
  auto fail = [&](const std::string& why) {
    return ExternalError(ExternalFailure::kMalformedResponse, why, line);
  };
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error&) {
    throw fail("response is not valid JSON");
  }
  if (!j.is_object()) throw fail("response is not an object");
  if (!j.contains("id") || !j["id"].is_string()) throw fail("response id missing or not a string");
  if (!j.contains("sentence_certainty") || !j["sentence_certainty"].is_number())
    throw fail("sentence_certainty missing or not a number");
  if (!j.contains("aspects")) throw fail("aspects missing");
  CertaintyScore s;
  s.finding_id = j["id"].get<std::string>();
  try {
    s.aspects = corpus::aspects_from_json(j["aspects"]);
  } catch (const Error& e) {
    throw fail(e.what());
  }
  const double raw = j["sentence_certainty"].get<double>();
  if (std::isnan(raw)) throw fail("sentence_certainty is NaN");
  s.sentence_certainty = clamp_certainty(raw);
  if (s.sentence_certainty != raw && warning) {
    *warning = "id '" + s.finding_id + "': sentence_certainty " + j["sentence_certainty"].dump() +
               " clamped to " + nlohmann::json(s.sentence_certainty).dump();
  }
  return s;
}

ExternalResult score_external(const std::vector<corpus::ScientificFinding>& findings,
                              LineChannel& channel, const ExternalOptions& options) {
  using Clock = std::chrono::steady_clock;
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < findings.size(); ++i) {
    if (!position.emplace(findings[i].finding_id, i).second)
      throw usage_error("duplicate finding id '" + findings[i].finding_id + "'");
  }
  const std::size_t bound = std::max<std::size_t>(1, options.max_in_flight);

  ExternalResult result;
  std::vector<std::optional<CertaintyScore>> slots(findings.size());
  std::map<std::string, Clock::time_point> pending;  // id -> deadline
  std::size_t next = 0, done = 0;
  while (done < findings.size()) {
    while (next < findings.size() && pending.size() < bound) {
      const auto& f = findings[next++];
      channel.send_line(encode_request(f.finding_id, f.text));
      pending.emplace(f.finding_id, Clock::now() + options.timeout);
    }
    auto earliest = pending.begin();
    for (auto it = pending.begin(); it != pending.end(); ++it)
      if (it->second < earliest->second) earliest = it;
    const auto wait = std::chrono::duration_cast<std::chrono::milliseconds>(earliest->second - Clock::now());
    auto line = channel.receive_line(std::max(wait, std::chrono::milliseconds(0)));
    if (!line) {
      throw ExternalError(ExternalFailure::kTimeout, "no response for id '" + earliest->first + "'",
                          encode_request(earliest->first, findings[position[earliest->first]].text));
    }
    std::string warning;
    auto score = decode_response(*line, &warning);
    auto it = pending.find(score.finding_id);
    if (it == pending.end())
      throw ExternalError(ExternalFailure::kIdMismatch,
                          "response id '" + score.finding_id + "' matches no pending request", *line);
    pending.erase(it);
    if (!warning.empty()) result.warnings.push_back(std::move(warning));
    score.scorer_id = "external";
    score.scorer_version = options.endpoint_label;
    slots[position[score.finding_id]] = std::move(score);
    ++done;
  }
  result.scores.reserve(slots.size());
  for (auto& s : slots) result.scores.push_back(std::move(*s));
  return result;
}

}  // namespace certkit::scoring
