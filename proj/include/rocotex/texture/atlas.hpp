#pragma once

#include "rocotex/core/types.hpp"

namespace rocotex {

// Global texture T* and global confidence C* in uv space. Texel (x, y) has
// its center at u = (x + 0.5) / N, v = 1 - (y + 0.5) / N, so row 0 holds the
// top of the uv square (v near 1), matching image orientation on export.
struct TextureAtlas {
  Raster<float, 3> color;
  Plane<float> confidence;

  TextureAtlas() = default;
  explicit TextureAtlas(int resolution, float fill = 0.0f)
      : color(resolution, resolution, fill), confidence(Plane<float>::Zero(resolution, resolution)) {}

  [[nodiscard]] int resolution() const { return static_cast<int>(confidence.cols()); }
};

// Continuous texel coordinates (texel centers at integers) of a uv point.
inline Vec2 uv_to_texel(const Vec2& uv, int resolution) {
  return {uv.x() * resolution - 0.5, (1.0 - uv.y()) * resolution - 0.5};
}

inline Vec2 texel_to_uv(double tx, double ty, int resolution) {
  return {(tx + 0.5) / resolution, 1.0 - (ty + 0.5) / resolution};
}

enum class TextureFilter { Bilinear, Nearest };

// Color lookup in which texels with C* below `keep_threshold` contribute
// `neutral` instead of their stored color.
Vec3f sample_color(const TextureAtlas& atlas, const Vec2& uv, float keep_threshold, float neutral,
                   TextureFilter filter = TextureFilter::Bilinear);

float sample_confidence(const TextureAtlas& atlas, const Vec2& uv);

}  // namespace rocotex
