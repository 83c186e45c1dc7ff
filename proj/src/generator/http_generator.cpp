#include "rocotex/generator/http_generator.hpp"

#include <cmath>
#include <cstdlib>
#include <regex>
#include <thread>

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "rocotex/generator/wire.hpp"

namespace rocotex {

ParsedUrl parse_endpoint(const std::string& url) {
  static const std::regex re(R"(^(http://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, re)) throw ConfigError("invalid backend endpoint '" + url + "'");
  return {m[1].str(), m[2].matched ? m[2].str() : std::string("/")};
}

HttpGenerator::HttpGenerator(HttpOptions options) : options_(std::move(options)) {
  if (options_.endpoint.empty()) {
    if (const char* env = std::getenv(kBackendUrlEnv)) options_.endpoint = env;
  }
  if (options_.endpoint.empty())
    throw ConfigError(std::string("no backend endpoint configured (set --endpoint or ") + kBackendUrlEnv + ")");
  if (options_.retries < 0) throw ConfigError("retries must be non-negative");
  if (!options_.sleep) options_.sleep = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  const auto parsed = parse_endpoint(options_.endpoint);
  base_url_ = parsed.scheme_host_port;
  path_ = parsed.path;
}

GenerationResponse HttpGenerator::generate(const GenerationRequest& request) {
  const std::string body = wire::encode_request(request).dump();

  httplib::Client client(base_url_);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(options_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  last_attempts_ = 0;
  std::string last_error;
  for (int attempt = 0; attempt <= options_.retries; ++attempt) {
    if (attempt > 0) {
      const auto delay = std::chrono::milliseconds(static_cast<long long>(
          std::llround(options_.backoff_base.count() * std::pow(options_.backoff_factor, attempt - 1))));
      spdlog::warn("backend transport failure ({}); retry {} of {} in {} ms", last_error, attempt, options_.retries,
                   delay.count());
      options_.sleep(delay);
    }
    ++last_attempts_;
    auto res = client.Post(path_, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status < 200 || res->status >= 300) {
      throw BackendError(res->status, "backend returned HTTP " + std::to_string(res->status) + ": " +
                                          res->body.substr(0, 200));
    }
    nlohmann::json reply;
    try {
      reply = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
      throw ProtocolError(std::string("backend reply is not JSON: ") + e.what());
    }
    return wire::decode_response(reply, request.width(), request.height());
  }
  throw TransportError("backend unreachable after " + std::to_string(last_attempts_) + " attempt(s): " + last_error);
}

}  // namespace rocotex
