// Copyright 2026 The ucgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Prompts, LLM backends, and transcripts.

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ucgen/ast.hpp"

namespace ucgen {

inline constexpr std::string_view kParentLanguage = "Python";

class PromptError : public Error {
 public:
  using Error::Error;
};

/// The fixed description of the child language shipped with the tool.
std::string_view child_language_description();

std::string build_initial_prompt(std::string_view task);

/// `code` must contain at least one `??`.
std::string build_holefill_prompt(std::string_view code, std::string_view task);

std::string sha256_hex(std::string_view data);

struct TranscriptEntry {
  int seq = 0;
  std::string prompt_sha256;
  std::string prompt;
  std::string response;
  long long ms = 0;
  std::string backend;

  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

class Transcript {
 public:
  std::string task_id;

  const std::vector<TranscriptEntry>& entries() const { return entries_; }
  void append(TranscriptEntry e);  // assigns seq and hash
  std::size_t size() const { return entries_.size(); }

  /// One JSON object per line.
  std::string to_jsonl() const;
  static Transcript from_jsonl(std::string_view text);
  static Transcript load(const std::string& path);
  void save(const std::string& path) const;

 private:
  std::vector<TranscriptEntry> entries_;
};

class BackendError : public Error {
 public:
  enum class Kind { Network, HttpStatus, EmptyCompletion, Exhausted, Mismatch, BadResponse };
  BackendError(Kind k, std::string msg) : Error(std::move(msg)), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class LlmBackend {
 public:
  virtual ~LlmBackend() = default;
  virtual std::string id() const = 0;
  virtual std::string complete(const std::string& prompt) = 0;
};

/// Calls the backend and appends the exchange to `log`.
std::string generate(LlmBackend& backend, const std::string& prompt, Transcript& log);

class MockBackend : public LlmBackend {
 public:
  explicit MockBackend(std::vector<std::string> responses) : responses_(std::move(responses)) {}
  std::string id() const override { return "mock"; }
  std::string complete(const std::string& prompt) override;
  int calls() const { return calls_; }

 private:
  std::vector<std::string> responses_;
  int calls_ = 0;
};

class ReplayBackend : public LlmBackend {
 public:
  ReplayBackend(Transcript t, bool loose) : transcript_(std::move(t)), loose_(loose) {}
  std::string id() const override { return "replay"; }
  std::string complete(const std::string& prompt) override;

 private:
  Transcript transcript_;
  bool loose_;
  std::size_t next_ = 0;
};

struct HttpConfig {
  std::string base_url;  // scheme://host[:port]
  std::string path = "/v1/chat/completions";
  std::string model;
  std::string api_key_env;  // name of the environment variable holding the key
  double temperature = 0.0;
  int timeout_s = 120;
};

/// Reads a JSON object with the HttpConfig field names. Throws ConfigError.
HttpConfig load_http_config(const std::string& path);

class HttpBackend : public LlmBackend {
 public:
  explicit HttpBackend(HttpConfig cfg);
  std::string id() const override { return "http:" + cfg_.model; }
  std::string complete(const std::string& prompt) override;

 private:
  HttpConfig cfg_;
  std::string api_key_;
};

struct BackendConfig {
  enum class Kind { Http, Replay, Mock };
  Kind kind = Kind::Mock;
  HttpConfig http;
  std::string transcript_path;
  bool replay_loose = false;
  std::vector<std::string> mock_responses;
};

std::unique_ptr<LlmBackend> make_backend(const BackendConfig& cfg);

}  // namespace ucgen
