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

// Stand-in for an external scorer. Speaks the line protocol on stdio or on a
// TCP port and can be told to misbehave in specific ways for client tests.
//
//   request:  {"id": "...", "text": "..."}
//   response: {"id": "...", "sentence_certainty": x, "aspects": {...}}

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

const char* const kAspects[] = {"number", "extent", "probability",
                                "framing", "condition", "suggestion"};
const char* const kLabels[] = {"not_present", "certain", "uncertain"};

struct Config {
  std::string mode = "echo";
  std::size_t after = 0;  // misbehave from this request on (0-based)
  int idle_ms = 30;       // reverse mode flushes after this much silence
};

// Deterministic, text-dependent output so clients can check reassembly.
nlohmann::ordered_json respond(const std::string& id, const std::string& text) {
  std::size_t h = 0;
  for (unsigned char c : text) h = h * 31 + c;
  nlohmann::ordered_json j;
  j["id"] = id;
  j["sentence_certainty"] = 1.0 + static_cast<double>(text.size() % 51) / 10.0;
  nlohmann::ordered_json aspects;
  for (int a = 0; a < 6; ++a) aspects[kAspects[a]] = kLabels[(h >> (2 * a)) % 3];
  j["aspects"] = aspects;
  return j;
}

class Server {
 public:
  Server(int in_fd, int out_fd, const Config& cfg) : in_(in_fd), out_(out_fd), cfg_(cfg) {}

  // Returns when the peer closes the stream.
  void run() {
    for (;;) {
      pollfd p{in_, POLLIN, 0};
      const int timeout = held_.empty() ? -1 : cfg_.idle_ms;
      const int rc = ::poll(&p, 1, timeout);
      if (rc == 0) {
        flush_reversed();
        continue;
      }
      if (rc < 0) return;
      char buf[4096];
      const ssize_t n = ::read(in_, buf, sizeof buf);
      if (n <= 0) {
        flush_reversed();
        return;
      }
      pending_.append(buf, static_cast<std::size_t>(n));
      std::size_t pos;
      while ((pos = pending_.find('\n')) != std::string::npos) {
        std::string line = pending_.substr(0, pos);
        pending_.erase(0, pos + 1);
        if (!handle(line)) return;
      }
    }
  }

 private:
  void write_line(const std::string& s) {
    std::string data = s + "\n";
    const char* p = data.data();
    std::size_t left = data.size();
    while (left > 0) {
      const ssize_t n = ::write(out_, p, left);
      if (n <= 0) return;
      p += n;
      left -= static_cast<std::size_t>(n);
    }
  }

  void flush_reversed() {
    for (auto it = held_.rbegin(); it != held_.rend(); ++it) write_line(*it);
    held_.clear();
  }

  // False: stop serving.
  bool handle(const std::string& line) {
    nlohmann::json req;
    try {
      req = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      write_line(R"({"error":"malformed request"})");
      return true;
    }
    if (!req.is_object() || !req.contains("id") || !req["id"].is_string()) {
      write_line(R"({"error":"request needs a string id"})");
      return true;
    }
    const std::string id = req["id"].get<std::string>();
    const std::string text = req.value("text", "");
    const bool misbehave = count_++ >= cfg_.after;
    auto resp = respond(id, text);
    if (!misbehave || cfg_.mode == "echo") {
      write_line(resp.dump());
    } else if (cfg_.mode == "reverse") {
      held_.push_back(resp.dump());
    } else if (cfg_.mode == "bad-id") {
      resp["id"] = id + "-unknown";
      write_line(resp.dump());
    } else if (cfg_.mode == "missing-aspect") {
      resp["aspects"].erase("suggestion");
      write_line(resp.dump());
    } else if (cfg_.mode == "out-of-range") {
      resp["sentence_certainty"] = 7.2;
      write_line(resp.dump());
    } else if (cfg_.mode == "garbage") {
      write_line("this is not json");
    } else if (cfg_.mode == "silent") {
      // Never answer.
    } else if (cfg_.mode == "close") {
      return false;
    }
    return true;
  }

  int in_;
  int out_;
  const Config& cfg_;
  std::string pending_;
  std::vector<std::string> held_;
  std::size_t count_ = 0;
};

int serve_tcp(int port, const std::string& port_file, bool once, const Config& cfg) {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) return 1;
  int yes = 1;
  ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = htons(static_cast<std::uint16_t>(port));
  if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(fd, 4) != 0) {
    std::perror("stub: bind/listen");
    return 1;
  }
  socklen_t len = sizeof addr;
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  if (!port_file.empty()) {
    // Written to a temporary name and renamed so readers never see a partial file.
    const std::string tmp = port_file + ".tmp";
    std::ofstream(tmp) << ntohs(addr.sin_port) << "\n";
    std::rename(tmp.c_str(), port_file.c_str());
  }
  do {
    const int conn = ::accept(fd, nullptr, nullptr);
    if (conn < 0) continue;
    Server(conn, conn, cfg).run();
    ::close(conn);
  } while (!once);
  ::close(fd);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  ::signal(SIGPIPE, SIG_IGN);
  CLI::App app{"Stub external certainty scorer"};
  Config cfg;
  int port = -1;
  std::string port_file;
  bool once = false;
  app.add_option("--mode", cfg.mode, "Behaviour")
      ->check(CLI::IsMember({"echo", "reverse", "bad-id", "missing-aspect", "out-of-range",
                             "garbage", "silent", "close"}));
  app.add_option("--after", cfg.after, "Answer correctly this many requests first");
  app.add_option("--idle-ms", cfg.idle_ms, "Reverse mode: flush after this much silence");
  app.add_option("--listen", port, "Serve TCP on 127.0.0.1:PORT (0 picks a free port)");
  app.add_option("--port-file", port_file, "Write the bound port here");
  app.add_flag("--once", once, "Exit after the first TCP connection closes");
  CLI11_PARSE(app, argc, argv);

  if (port >= 0) return serve_tcp(port, port_file, once, cfg);
  Server(STDIN_FILENO, STDOUT_FILENO, cfg).run();
  return 0;
}
