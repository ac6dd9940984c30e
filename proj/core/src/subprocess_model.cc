// Copyright 2026 The GUTEK Authors.
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

#include "gutek/subprocess_model.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "gutek/error.h"

namespace gutek {

namespace {

void IgnoreSigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

[[noreturn]] void Unavailable(const std::string& what) {
  throw Error(ErrorCode::kModelUnavailable, what);
}

}  // namespace

SubprocessModel::SubprocessModel(const std::string& command,
                                 SubprocessOptions options)
    : options_(options), command_(command) {
  IgnoreSigpipe();
  int in_pipe[2];
  int out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) Unavailable("pipe: " + std::string(std::strerror(errno)));
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    Unavailable("pipe: " + std::string(std::strerror(errno)));
  }
  pid_ = ::fork();
  if (pid_ < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    Unavailable("fork: " + std::string(std::strerror(errno)));
  }
  if (pid_ == 0) {
    // Own process group, so shutdown reaches processes the shell spawns.
    ::setpgid(0, 0);
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid_, pid_);
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];

  std::string line;
  try {
    line = ReadLine(options_.handshake_timeout);
    handshake_ = protocol::DecodeHandshake(line);
  } catch (...) {
    Shutdown();
    throw;
  }
  info_.model_id = handshake_.model_id;
  info_.labels = handshake_.labels;
  info_.can_predict = handshake_.Has("predict");
  info_.can_embed = handshake_.Has("embed");
}

SubprocessModel::~SubprocessModel() { Shutdown(); }

void SubprocessModel::Shutdown() {
  if (to_child_ >= 0) {
    ::close(to_child_);
    to_child_ = -1;
  }
  if (from_child_ >= 0) {
    ::close(from_child_);
    from_child_ = -1;
  }
  if (pid_ > 0) {
    // Closing stdin asks the adapter to exit; escalate if it lingers.
    int status = 0;
    for (int i = 0; i < 50; ++i) {
      if (::waitpid(pid_, &status, WNOHANG) == pid_) {
        pid_ = -1;
        return;
      }
      ::usleep(10'000);
    }
    ::kill(-pid_, SIGKILL);
    ::waitpid(pid_, &status, 0);
    pid_ = -1;
  }
}

uint64_t SubprocessModel::requests_sent() const {
  std::lock_guard<std::mutex> lock(mu_);
  return next_id_ - 1;
}

std::string SubprocessModel::ReadLine(std::chrono::milliseconds timeout) {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  while (true) {
    const size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      broken_ = true;
      Unavailable("model adapter timed out ('" + command_ + "')");
    }
    pollfd pfd{from_child_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, static_cast<int>(left.count()));
    if (ready < 0 && errno == EINTR) continue;
    if (ready <= 0) continue;
    char chunk[65536];
    const ssize_t n = ::read(from_child_, chunk, sizeof(chunk));
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) {
      broken_ = true;
      Unavailable("model adapter exited ('" + command_ + "')");
    }
    buffer_.append(chunk, static_cast<size_t>(n));
  }
}

void SubprocessModel::WriteLine(const std::string& line) {
  std::string data = line;
  data.push_back('\n');
  size_t off = 0;
  while (off < data.size()) {
    const ssize_t n = ::write(to_child_, data.data() + off, data.size() - off);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) {
      broken_ = true;
      Unavailable("cannot write to model adapter ('" + command_ + "')");
    }
    off += static_cast<size_t>(n);
  }
}

std::vector<RawResult> SubprocessModel::Call(protocol::Op op,
                                             std::span<const std::string> texts) {
  std::lock_guard<std::mutex> lock(mu_);
  if (broken_) Unavailable("model adapter is no longer usable ('" + command_ + "')");

  protocol::Request request;
  request.id = next_id_++;
  request.op = op;
  request.texts.assign(texts.begin(), texts.end());
  WriteLine(protocol::EncodeRequest(request));

  const std::string line = ReadLine(options_.request_timeout);
  protocol::Response response;
  try {
    response = protocol::DecodeResponse(line);
  } catch (const Error&) {
    broken_ = true;
    throw;
  }
  if (response.id != request.id) {
    broken_ = true;
    throw Error(ErrorCode::kProtocolError,
                "response id " + std::to_string(response.id) + " does not match request id " +
                    std::to_string(request.id) + "; offending line: " + line);
  }

  std::vector<RawResult> out;
  out.reserve(texts.size());
  if (response.kind == protocol::Response::Kind::kError) {
    for (size_t i = 0; i < texts.size(); ++i) out.push_back(RawResult::Fail(response.error));
    return out;
  }
  const auto expected = op == protocol::Op::kPredict ? protocol::Response::Kind::kScores
                                                     : protocol::Response::Kind::kVectors;
  if (response.kind != expected || response.rows.size() != texts.size()) {
    broken_ = true;
    throw Error(ErrorCode::kProtocolError,
                "response does not answer the request; offending line: " + line);
  }
  for (size_t i = 0; i < response.rows.size(); ++i) {
    if (response.rows[i]) {
      out.push_back(RawResult::Ok(std::move(*response.rows[i])));
    } else {
      const bool has_msg = i < response.item_errors.size() && response.item_errors[i];
      out.push_back(RawResult::Fail(has_msg ? *response.item_errors[i]
                                            : std::string("adapter returned no result")));
    }
  }
  return out;
}

std::vector<RawResult> SubprocessModel::Predict(std::span<const std::string> texts) {
  if (!info_.can_predict) {
    throw Error(ErrorCode::kUnsupportedCapability, "adapter does not advertise predict");
  }
  return Call(protocol::Op::kPredict, texts);
}

std::vector<RawResult> SubprocessModel::Embed(std::span<const std::string> texts) {
  if (!info_.can_embed) {
    throw Error(ErrorCode::kUnsupportedCapability,
                "adapter '" + info_.model_id + "' does not advertise embed");
  }
  return Call(protocol::Op::kEmbed, texts);
}

}  // namespace gutek
