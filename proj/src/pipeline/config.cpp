#include "rocotex/pipeline/config.hpp"

#include <set>

#include "rocotex/generator/http_generator.hpp"
#include "rocotex/generator/mock_generator.hpp"
#include "rocotex/mask/morphology.hpp"

namespace rocotex {

void PipelineConfig::apply_desk_scale() {
  view_width = 512;
  view_height = 512;
  atlas_resolution = 512;
}

double PipelineConfig::effective_dilation_radius() const {
  return dilation_radius > 0 ? dilation_radius : scaled_dilation_radius(view_width);
}

double PipelineConfig::effective_blur_sigma() const {
  return blur_sigma > 0 ? blur_sigma : effective_dilation_radius() / 3.0;
}

ViewScheduleConfig PipelineConfig::schedule() const {
  return {pair_count, camera_radius, fov_y, elevation, extra_elevation, view_width, view_height};
}

void PipelineConfig::validate() const {
  if (view_width < 16 || view_height < 16) throw ConfigError("view resolution must be at least 16 px");
  if (atlas_resolution < 16) throw ConfigError("atlas resolution must be at least 16 texels");
  if (pair_count < 1 || pair_count > kMaxViewPairs)
    throw ConfigError("pair count must be between 1 and " + std::to_string(kMaxViewPairs));
  if (!(keep_threshold > 0.0f && keep_threshold < 1.0f)) throw ConfigError("keep threshold must lie in (0, 1)");
  for (const double w : {weights.depth, weights.normal, weights.edge})
    if (!(w >= 0.0 && w <= 2.0)) throw ConfigError("control weights must lie in [0, 2]");
  if (!(epsilon > 0)) throw ConfigError("epsilon must be positive");
  if (!(alpha >= 0)) throw ConfigError("alpha must be non-negative");
  if (!(camera_radius > 1.0)) throw ConfigError("camera radius must exceed the bounding-sphere radius");
  if (!(fov_y > 0 && fov_y < 180)) throw ConfigError("field of view must lie in (0, 180)");
  if (steps < 1) throw ConfigError("steps must be positive");
  if (retries < 0) throw ConfigError("retries must be non-negative");
  if (timeout_ms < 1) throw ConfigError("timeout must be positive");
}

namespace {

const std::set<std::string> kKnownKeys = {
    "mesh",        "prompt",         "negative",      "backend",      "endpoint",   "seed",
    "pairs",       "view_size",      "atlas",         "dilate",       "blur_sigma", "alpha",
    "keep_thresh", "weights",        "desk",          "debug_dir",    "out",        "confidence_law",
    "soft_inpainting", "steps",      "guidance",      "camera_radius", "fov",       "elevation",
    "extra_elevation", "epsilon",    "depth_bias",    "retries",      "timeout_ms", "overrides",
};

}  // namespace

void apply_json(PipelineConfig& c, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!kKnownKeys.count(key)) throw ConfigError("unknown config key '" + key + "'");
  try {
    if (j.value("desk", false)) c.apply_desk_scale();
    if (j.contains("view_size")) {
      const auto& v = j.at("view_size");
      if (!v.is_array() || v.size() != 2) throw ConfigError("view_size must be [W, H]");
      c.view_width = v[0].get<int>();
      c.view_height = v[1].get<int>();
    }
    if (j.contains("atlas")) c.atlas_resolution = j.at("atlas").get<int>();
    if (j.contains("pairs")) c.pair_count = j.at("pairs").get<int>();
    if (j.contains("dilate")) c.dilation_radius = j.at("dilate").get<double>();
    if (j.contains("blur_sigma")) c.blur_sigma = j.at("blur_sigma").get<double>();
    if (j.contains("alpha")) c.alpha = j.at("alpha").get<double>();
    if (j.contains("keep_thresh")) c.keep_threshold = j.at("keep_thresh").get<float>();
    if (j.contains("weights")) {
      const auto& w = j.at("weights");
      if (!w.is_array() || w.size() != 3) throw ConfigError("weights must be [D, N, E]");
      c.weights = {w[0].get<double>(), w[1].get<double>(), w[2].get<double>()};
    }
    if (j.contains("backend")) {
      const auto b = j.at("backend").get<std::string>();
      if (b == "mock") c.backend = BackendKind::Mock;
      else if (b == "http") c.backend = BackendKind::Http;
      else throw ConfigError("backend must be 'mock' or 'http'");
    }
    if (j.contains("endpoint")) c.endpoint = j.at("endpoint").get<std::string>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("debug_dir")) c.debug_dir = j.at("debug_dir").get<std::string>();
    if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
    if (j.contains("confidence_law")) {
      const auto law = j.at("confidence_law").get<std::string>();
      if (law == "cosine") c.confidence_law = ConfidenceLaw::Cosine;
      else if (law == "linear") c.confidence_law = ConfidenceLaw::Linear;
      else throw ConfigError("confidence_law must be 'cosine' or 'linear'");
    }
    if (j.contains("soft_inpainting")) c.soft_inpainting = j.at("soft_inpainting").get<bool>();
    if (j.contains("steps")) c.steps = j.at("steps").get<int>();
    if (j.contains("guidance")) c.guidance = j.at("guidance").get<double>();
    if (j.contains("camera_radius")) c.camera_radius = j.at("camera_radius").get<double>();
    if (j.contains("fov")) c.fov_y = j.at("fov").get<double>();
    if (j.contains("elevation")) c.elevation = j.at("elevation").get<double>();
    if (j.contains("extra_elevation")) c.extra_elevation = j.at("extra_elevation").get<double>();
    if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
    if (j.contains("depth_bias")) c.depth_bias = j.at("depth_bias").get<double>();
    if (j.contains("retries")) c.retries = j.at("retries").get<int>();
    if (j.contains("timeout_ms")) c.timeout_ms = j.at("timeout_ms").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

nlohmann::json to_json(const PipelineConfig& c) {
  return {
      {"view_size", {c.view_width, c.view_height}},
      {"atlas", c.atlas_resolution},
      {"pairs", c.pair_count},
      {"dilate", c.effective_dilation_radius()},
      {"blur_sigma", c.effective_blur_sigma()},
      {"soft_inpainting", c.soft_inpainting},
      {"alpha", c.alpha},
      {"confidence_law", c.confidence_law == ConfidenceLaw::Cosine ? "cosine" : "linear"},
      {"keep_thresh", c.keep_threshold},
      {"epsilon", c.epsilon},
      {"depth_bias", c.depth_bias},
      {"weights", {c.weights.depth, c.weights.normal, c.weights.edge}},
      {"backend", c.backend == BackendKind::Mock ? "mock" : "http"},
      {"endpoint", c.endpoint},
      {"seed", c.seed},
      {"steps", c.steps},
      {"guidance", c.guidance},
      {"camera_radius", c.camera_radius},
      {"fov", c.fov_y},
      {"elevation", c.elevation},
      {"extra_elevation", c.extra_elevation},
      {"retries", c.retries},
      {"timeout_ms", c.timeout_ms},
  };
}

std::unique_ptr<Generator> make_generator(const PipelineConfig& config) {
  if (config.backend == BackendKind::Mock) return std::make_unique<MockGenerator>();
  HttpOptions opts;
  opts.endpoint = config.endpoint;
  opts.timeout = std::chrono::milliseconds(config.timeout_ms);
  opts.retries = config.retries;
  return std::make_unique<HttpGenerator>(std::move(opts));
}

}  // namespace rocotex
