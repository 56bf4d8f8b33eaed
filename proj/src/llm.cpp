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

#include "ucgen/llm.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "ucgen/child_language.hpp"

namespace ucgen {

using nlohmann::json;

std::string_view child_language_description() {
  std::string_view d(kChildLanguageDescription);
  while (!d.empty() && (d.back() == '\n' || d.back() == ' ')) d.remove_suffix(1);
  return d;
}

namespace {

// Lines 2-6 of the initial template.
std::string task_tail(std::string_view task) {
  std::string out;
  out += "> ";
  out += task;
  out += "\nReply with your code inside one unique code block\n";
  out += child_language_description();
  out += "\nI can definitely do that! Here is the code:\n```\n";
  return out;
}

}  // namespace

std::string build_initial_prompt(std::string_view task) {
  if (task.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw PromptError("task text is empty");
  std::string out = "Write " + std::string(kParentLanguage) +
                    " code to complete the following task.\n";
  return out + task_tail(task);
}

std::string build_holefill_prompt(std::string_view code, std::string_view task) {
  if (code.find("??") == std::string_view::npos)
    throw PromptError("hole-fill prompt needs code containing ??");
  if (task.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw PromptError("task text is empty");
  std::string out = "Fix the following " + std::string(kParentLanguage) +
                    " code by replacing every occurrence of `??` with the correct code.\n";
  out += "```\n";
  out += code;
  if (!code.empty() && code.back() != '\n') out += '\n';
  out += "```\n";
  out += "Make sure that your code completes the following task.\n";
  return out + task_tail(task);
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Transcript

void Transcript::append(TranscriptEntry e) {
  e.seq = static_cast<int>(entries_.size());
  e.prompt_sha256 = sha256_hex(e.prompt);
  entries_.push_back(std::move(e));
}

std::string Transcript::to_jsonl() const {
  std::string out;
  for (const auto& e : entries_) {
    json j = {{"seq", e.seq},       {"prompt_sha256", e.prompt_sha256},
              {"prompt", e.prompt}, {"response", e.response},
              {"ms", e.ms},         {"backend", e.backend}};
    out += j.dump() + "\n";
  }
  return out;
}

Transcript Transcript::from_jsonl(std::string_view text) {
  Transcript t;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json j = json::parse(line);
      TranscriptEntry e;
      e.prompt = j.value("prompt", "");
      e.response = j.at("response").get<std::string>();
      e.ms = j.value("ms", 0LL);
      e.backend = j.value("backend", "");
      e.seq = j.value("seq", static_cast<int>(t.entries_.size()));
      e.prompt_sha256 = j.value("prompt_sha256", e.prompt.empty() ? "" : sha256_hex(e.prompt));
      t.entries_.push_back(std::move(e));
    } catch (const json::exception& ex) {
      throw ConfigError("transcript line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return t;
}

Transcript Transcript::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read transcript " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  Transcript t = from_jsonl(ss.str());
  auto slash = path.find_last_of('/');
  std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = stem.find('.');
  t.task_id = stem.substr(0, dot);
  return t;
}

void Transcript::save(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write transcript " + path);
  f << to_jsonl();
}

// ---------------------------------------------------------------------------
// Backends

std::string generate(LlmBackend& backend, const std::string& prompt, Transcript& log) {
  auto t0 = std::chrono::steady_clock::now();
  std::string response = backend.complete(prompt);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (response.find_first_not_of(" \t\r\n") == std::string::npos)
    throw BackendError(BackendError::Kind::EmptyCompletion, backend.id() + " returned an empty completion");
  TranscriptEntry e;
  e.prompt = prompt;
  e.response = response;
  e.ms = ms;
  e.backend = backend.id();
  log.append(std::move(e));
  return response;
}

std::string MockBackend::complete(const std::string&) {
  if (static_cast<std::size_t>(calls_) >= responses_.size())
    throw BackendError(BackendError::Kind::Exhausted,
                       "mock backend has no response left after " + std::to_string(calls_) + " calls");
  return responses_[calls_++];
}

std::string ReplayBackend::complete(const std::string& prompt) {
  const auto& es = transcript_.entries();
  if (next_ >= es.size())
    throw BackendError(BackendError::Kind::Exhausted,
                       "replay transcript exhausted after " + std::to_string(next_) + " entries");
  const TranscriptEntry& e = es[next_];
  if (!loose_ && e.prompt_sha256 != sha256_hex(prompt))
    throw BackendError(BackendError::Kind::Mismatch,
                       "replay entry " + std::to_string(e.seq) + " was recorded for a different prompt");
  ++next_;
  return e.response;
}

HttpConfig load_http_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read backend config " + path);
  HttpConfig c;
  try {
    json j = json::parse(f);
    c.base_url = j.at("base_url").get<std::string>();
    c.model = j.at("model").get<std::string>();
    c.path = j.value("path", c.path);
    c.api_key_env = j.value("api_key_env", "");
    c.temperature = j.value("temperature", 0.0);
    c.timeout_s = j.value("timeout_s", 120);
    if (j.contains("api_key"))
      throw ConfigError("backend config must name an environment variable (api_key_env), not hold the key");
  } catch (const json::exception& e) {
    throw ConfigError("backend config " + path + ": " + e.what());
  }
  if (c.timeout_s < 1) throw ConfigError("timeout_s must be positive");
  return c;
}

HttpBackend::HttpBackend(HttpConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.base_url.empty()) throw ConfigError("http backend needs base_url");
  if (!cfg_.api_key_env.empty()) {
    const char* key = std::getenv(cfg_.api_key_env.c_str());
    if (!key || !*key) throw ConfigError("environment variable " + cfg_.api_key_env + " is not set");
    api_key_ = key;
  }
}

std::string HttpBackend::complete(const std::string& prompt) {
  httplib::Client cli(cfg_.base_url);
  cli.set_connection_timeout(cfg_.timeout_s);
  cli.set_read_timeout(cfg_.timeout_s);
  cli.set_write_timeout(cfg_.timeout_s);
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
  json body = {{"model", cfg_.model},
               {"temperature", cfg_.temperature},
               {"messages", json::array({{{"role", "user"}, {"content", prompt}}})}};
  auto res = cli.Post(cfg_.path, headers, body.dump(), "application/json");
  if (!res) throw BackendError(BackendError::Kind::Network, "http: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw BackendError(BackendError::Kind::HttpStatus, "http status " + std::to_string(res->status));
  try {
    json j = json::parse(res->body);
    const json& content = j.at("choices").at(0).at("message").at("content");
    if (!content.is_string() || content.get<std::string>().empty())
      throw BackendError(BackendError::Kind::EmptyCompletion, "http: empty completion");
    return content.get<std::string>();
  } catch (const json::exception& e) {
    throw BackendError(BackendError::Kind::BadResponse, std::string("http: malformed response: ") + e.what());
  }
}

std::unique_ptr<LlmBackend> make_backend(const BackendConfig& cfg) {
  switch (cfg.kind) {
    case BackendConfig::Kind::Mock: return std::make_unique<MockBackend>(cfg.mock_responses);
    case BackendConfig::Kind::Replay:
      return std::make_unique<ReplayBackend>(Transcript::load(cfg.transcript_path), cfg.replay_loose);
    case BackendConfig::Kind::Http: return std::make_unique<HttpBackend>(cfg.http);
  }
  throw ConfigError("unknown backend");
}

}  // namespace ucgen
