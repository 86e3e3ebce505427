// Copyright 2026 The toucan-prep Authors
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

#include "toucan_prep/g2p_provider.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <csignal>
#include <cstring>
#include <fstream>
#include <mutex>

#include "toucan_prep/errors.h"
#include "toucan_prep/text.h"
#include "utf8.h"

extern char** environ;

namespace toucan_prep {

namespace {

bool Contains(const std::vector<std::string>& items, std::string_view item) {
  return std::find(items.begin(), items.end(), item) != items.end();
}

std::string NormalizeLookupKey(std::string_view word) {
  std::string key = internal::ToLowerFrench(word);
  // Typographic apostrophe to ASCII.
  const std::string curly = "’";
  for (size_t pos = key.find(curly); pos != std::string::npos;
       pos = key.find(curly, pos)) {
    key.replace(pos, curly.size(), "'");
  }
  return key;
}

class Fd {
 public:
  explicit Fd(int fd = -1) : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  ~Fd() { Close(); }
  int get() const { return fd_; }
  void Close() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }
  void Reset(int fd) {
    Close();
    fd_ = fd;
  }

 private:
  int fd_;
};

[[noreturn]] void Unavailable(const std::string& program,
                              const std::string& why) {
  throw Error(ErrorCode::kProviderUnavailable,
              "phonemizer '" + program + "': " + why);
}

}  // namespace

std::string Phonemize(std::string_view text, const G2pProvider& provider,
                      std::string_view lang) {
  if (!provider.SupportsLanguage(lang)) {
    throw Error(ErrorCode::kUnsupportedLanguage,
                "provider '" + std::string(provider.name()) +
                    "' does not support language '" + std::string(lang) + "'");
  }
  if (text.empty()) return {};
  return provider.Phonemize(text, lang);
}

LexiconG2pProvider::LexiconG2pProvider(
    std::map<std::string, std::string> lexicon,
    std::vector<std::string> languages)
    : languages_(std::move(languages)) {
  for (auto& [word, ipa] : lexicon) {
    lexicon_.emplace(NormalizeLookupKey(word), std::move(ipa));
  }
}

LexiconG2pProvider LexiconG2pProvider::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open lexicon " + path);
  std::map<std::string, std::string> lexicon;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto cols = internal::SplitString(line, '\t');
    if (cols.size() != 2 || cols[0].empty()) {
      throw ParseError(path, line_no, "expected word<TAB>ipa");
    }
    lexicon[cols[0]] = cols[1];
  }
  return LexiconG2pProvider(std::move(lexicon));
}

bool LexiconG2pProvider::SupportsLanguage(std::string_view lang) const {
  return Contains(languages_, lang);
}

const std::string* LexiconG2pProvider::Lookup(std::string_view word) const {
  auto it = lexicon_.find(NormalizeLookupKey(word));
  return it == lexicon_.end() ? nullptr : &it->second;
}

std::string LexiconG2pProvider::Phonemize(std::string_view text,
                                          std::string_view lang) const {
  if (!SupportsLanguage(lang)) {
    throw Error(ErrorCode::kUnsupportedLanguage,
                "lexicon provider: unsupported language " + std::string(lang));
  }
  // A lone elided form ("m'") would otherwise tokenize as letter + quote.
  if (const std::string* whole = Lookup(text)) return *whole;
  std::string out;
  for (const TextToken& token : TokenizeWords(text)) {
    if (token.is_punctuation) {
      out += token.surface;
      continue;
    }
    const std::string* ipa = Lookup(token.surface);
    if (ipa == nullptr) {
      throw Error(ErrorCode::kOutOfVocabulary,
                  "word not in lexicon: '" + token.surface + "'");
    }
    if (!out.empty()) out.push_back(' ');
    out += *ipa;
  }
  return out;
}

CommandG2pProvider::CommandG2pProvider(std::string program,
                                       std::vector<std::string> languages)
    : program_(std::move(program)), languages_(std::move(languages)) {}

bool CommandG2pProvider::SupportsLanguage(std::string_view lang) const {
  return Contains(languages_, lang);
}

std::string CommandG2pProvider::Phonemize(std::string_view text,
                                          std::string_view lang) const {
  if (!SupportsLanguage(lang)) {
    throw Error(ErrorCode::kUnsupportedLanguage,
                "command provider: unsupported language " + std::string(lang));
  }
  int in_pipe[2];
  int out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) Unavailable(program_, "pipe failed");
  Fd child_stdin(in_pipe[0]);
  Fd parent_write(in_pipe[1]);
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) Unavailable(program_, "pipe failed");
  Fd parent_read(out_pipe[0]);
  Fd child_stdout(out_pipe[1]);

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, child_stdin.get(), STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, child_stdout.get(), STDOUT_FILENO);

  std::string lang_arg(lang);
  std::vector<char*> argv = {const_cast<char*>(program_.c_str()),
                             const_cast<char*>("--lang"), lang_arg.data(),
                             const_cast<char*>("--ipa"), nullptr};
  pid_t pid = 0;
  const int rc = posix_spawnp(&pid, program_.c_str(), &actions, nullptr,
                              argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) Unavailable(program_, std::strerror(rc));
  child_stdin.Close();
  child_stdout.Close();

  // A child that exits without draining stdin must surface as an exit
  // status rather than SIGPIPE in this process.
  static std::once_flag ignore_sigpipe;
  std::call_once(ignore_sigpipe, [] { std::signal(SIGPIPE, SIG_IGN); });

  std::string output;
  size_t written = 0;
  char buffer[4096];
  bool write_open = true;
  bool read_open = true;
  if (text.empty()) {
    parent_write.Close();
    write_open = false;
  }
  while (read_open) {
    pollfd fds[2];
    nfds_t count = 0;
    fds[count++] = {parent_read.get(), POLLIN, 0};
    if (write_open) fds[count++] = {parent_write.get(), POLLOUT, 0};
    if (::poll(fds, count, -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      const ssize_t n = ::read(parent_read.get(), buffer, sizeof(buffer));
      if (n > 0) {
        output.append(buffer, static_cast<size_t>(n));
      } else if (n == 0 || errno != EINTR) {
        read_open = false;
      }
    }
    if (write_open && count > 1 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t n = ::write(parent_write.get(), text.data() + written,
                                text.size() - written);
      if (n > 0) written += static_cast<size_t>(n);
      if (n < 0 && errno != EINTR && errno != EAGAIN) written = text.size();
      if (written >= text.size()) {
        parent_write.Close();
        write_open = false;
      }
    }
  }
  parent_write.Close();
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (WIFSIGNALED(status)) {
    Unavailable(program_, "killed by signal " + std::to_string(WTERMSIG(status)));
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    Unavailable(program_,
                "exited with status " + std::to_string(WEXITSTATUS(status)));
  }
  while (!output.empty() && (output.back() == '\n' || output.back() == '\r')) {
    output.pop_back();
  }
  return output;
}

}  // namespace toucan_prep
