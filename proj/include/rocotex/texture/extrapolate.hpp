#pragma once

#include "rocotex/geometry/mesh.hpp"
#include "rocotex/texture/atlas.hpp"

namespace rocotex {

inline constexpr int kGutterTexels = 4;

struct ExtrapolationStats {
  int passes = 0;
  int filled = 0;
};

// Neighbor diffusion fill. Each pass (double-buffered, row-major) gives
// every texel below `keep_threshold` that has at least one textured
// 8-neighbor the confidence-weighted mean color of those neighbors and
// confidence `keep_threshold`. Passes repeat until no chart texel is left
// untextured, then continue for kGutterTexels more.
// Throws "empty texture" when nothing is textured.
TextureAtlas extrapolate(const TextureAtlas& atlas, const Plane<bool>& chart_mask, float keep_threshold,
                         ExtrapolationStats* stats = nullptr);
TextureAtlas extrapolate(const TextureAtlas& atlas, const TriangleMesh& mesh, float keep_threshold,
                         ExtrapolationStats* stats = nullptr);

// Share of chart texels with C* >= keep_threshold.
double texel_coverage(const TextureAtlas& atlas, const Plane<bool>& chart_mask, float keep_threshold);

// Mean RGB gradient magnitude (central differences, edge-clamped) over the
// texels flagged in `boundary`; 0 for an empty boundary.
double seam_energy(const TextureAtlas& atlas, const Plane<bool>& boundary);

}  // namespace rocotex
