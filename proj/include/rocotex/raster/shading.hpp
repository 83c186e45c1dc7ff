#pragma once

#include "rocotex/raster/rasterizer.hpp"
#include "rocotex/texture/atlas.hpp"

namespace rocotex {

inline constexpr float kNeutralGray = 0.5f;

// Unlit albedo render of the current texture state. Background pixels and
// texels whose confidence is below `keep_threshold` show `neutral`.
ViewImage render_color(const GBuffer& gbuffer, const TriangleMesh& mesh, const TextureAtlas& atlas,
                       float keep_threshold = 0.1f, float neutral = kNeutralGray,
                       TextureFilter filter = TextureFilter::Bilinear);

// Conditioning inputs for the generation backend, all in [0, 1].
struct ControlMaps {
  Plane<float> depth;       // near = 1.0, far = 0.05, background 0
  Raster<float, 3> normal;  // camera-space normal encoded (n + 1) / 2, background 0.5
  Plane<float> edge;        // {0, 1}

  [[nodiscard]] int width() const { return static_cast<int>(depth.cols()); }
  [[nodiscard]] int height() const { return static_cast<int>(depth.rows()); }
};

struct EdgeThresholds {
  float depth = 0.02f;       // Sobel magnitude on normalized depth, per pixel
  float normal_deg = 20.0f;  // angle between neighboring normals
};

ControlMaps control_maps(const GBuffer& gbuffer, const CameraView& view, const EdgeThresholds& thresholds = {});

// Normalized depth as stored in ControlMaps::depth.
Plane<float> normalized_depth(const GBuffer& gbuffer);

ControlMaps concat(const ControlMaps& a, const ControlMaps& b);
std::pair<ControlMaps, ControlMaps> split(const ControlMaps& m);

}  // namespace rocotex
