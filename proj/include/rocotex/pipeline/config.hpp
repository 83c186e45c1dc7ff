#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include <json.hpp>

#include "rocotex/generator/generator.hpp"
#include "rocotex/geometry/camera.hpp"
#include "rocotex/mask/confidence.hpp"
#include "rocotex/raster/shading.hpp"

namespace rocotex {

enum class BackendKind { Mock, Http };

struct PipelineConfig {
  int view_width = 1024;
  int view_height = 1024;
  int atlas_resolution = 1024;
  int pair_count = 2;

  double camera_radius = 2.5;  // in bounding-sphere radii
  double fov_y = 40.0;
  double elevation = 0.0;
  double extra_elevation = 45.0;

  // Non-positive means derived: 24 px at 1024 px view width, scaled with the
  // width; sigma = radius / 3.
  double dilation_radius = -1.0;
  double blur_sigma = -1.0;
  // Send the blurred mask as per-pixel strength; false sends the dilated
  // binary mask in its place.
  bool soft_inpainting = true;

  double alpha = 1.0;
  ConfidenceLaw confidence_law = ConfidenceLaw::Cosine;
  float keep_threshold = 0.1f;
  double epsilon = 1e-8;
  double depth_bias = 1e-3;  // in bounding-sphere radii
  float neutral = kNeutralGray;
  EdgeThresholds edges;

  ControlWeights weights;
  BackendKind backend = BackendKind::Mock;
  std::string endpoint;
  int timeout_ms = 120'000;
  int retries = 3;
  std::uint64_t seed = 0;
  int steps = 30;
  double guidance = 7.5;

  std::filesystem::path out_dir;
  std::filesystem::path debug_dir;

  // 512 x 512 views and a 512^2 atlas.
  void apply_desk_scale();

  [[nodiscard]] double effective_dilation_radius() const;
  [[nodiscard]] double effective_blur_sigma() const;
  [[nodiscard]] ViewScheduleConfig schedule() const;

  // Throws ConfigError when an invariant is violated.
  void validate() const;
};

// Keys mirror the CLI flags: view_size [W, H], atlas, pairs, dilate,
// blur_sigma, alpha, keep_thresh, weights [D, N, E], backend, endpoint,
// seed, desk, debug_dir, out, plus the extended keys listed in README.
// Unknown keys are rejected.
void apply_json(PipelineConfig& config, const nlohmann::json& j);
nlohmann::json to_json(const PipelineConfig& config);

std::unique_ptr<Generator> make_generator(const PipelineConfig& config);

}  // namespace rocotex
