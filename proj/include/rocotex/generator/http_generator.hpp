#pragma once

#include <chrono>
#include <functional>
#include <string>

#include "rocotex/generator/generator.hpp"

namespace rocotex {

inline constexpr const char* kBackendUrlEnv = "ROCOTEX_BACKEND_URL";

struct HttpOptions {
  // http://host[:port][/path] (plain HTTP only). Empty means read ROCOTEX_BACKEND_URL.
  std::string endpoint;
  std::chrono::milliseconds timeout{120'000};
  // Retries after the first attempt; only transport failures are retried.
  int retries = 3;
  std::chrono::milliseconds backoff_base{1000};
  double backoff_factor = 2.0;
  // Injected so tests can record the schedule instead of waiting it out.
  std::function<void(std::chrono::milliseconds)> sleep;
};

// POSTs the JSON wire request and decodes the single-image reply.
class HttpGenerator final : public Generator {
 public:
  explicit HttpGenerator(HttpOptions options);

  GenerationResponse generate(const GenerationRequest& request) override;
  [[nodiscard]] std::string name() const override { return "http"; }

  [[nodiscard]] int last_attempts() const { return last_attempts_; }
  [[nodiscard]] const std::string& endpoint() const { return options_.endpoint; }

 private:
  HttpOptions options_;
  std::string base_url_;
  std::string path_;
  int last_attempts_ = 0;
};

struct ParsedUrl {
  std::string scheme_host_port;  // "http://host:port"
  std::string path;              // "/generate", "/" when absent
};
ParsedUrl parse_endpoint(const std::string& url);

}  // namespace rocotex
