#pragma once

#include <limits>

#include "rocotex/core/types.hpp"
#include "rocotex/geometry/camera.hpp"
#include "rocotex/geometry/mesh.hpp"

namespace rocotex {

// Per-pixel geometry of one view. Uncovered pixels hold triangle -1 and
// depth +inf.
struct GBuffer {
  static constexpr float kBackground = std::numeric_limits<float>::infinity();

  Plane<int> triangle;
  Raster<float, 3> barycentric;
  Plane<float> depth;
  Raster<float, 3> position;
  Raster<float, 3> normal;

  GBuffer() = default;
  GBuffer(int width, int height);

  [[nodiscard]] int width() const { return static_cast<int>(triangle.cols()); }
  [[nodiscard]] int height() const { return static_cast<int>(triangle.rows()); }
  [[nodiscard]] bool covered(int x, int y) const { return triangle(y, x) >= 0; }
  [[nodiscard]] Plane<bool> coverage() const { return triangle >= 0; }
};

// Z-buffered, back-face-culled, perspective-correct rasterization with one
// sample at each pixel center. Triangles crossing the near plane are skipped.
GBuffer rasterize(const TriangleMesh& mesh, const CameraView& view);

// Interpolated uv at a covered pixel.
Vec2 interpolate_uv(const GBuffer& gbuffer, const TriangleMesh& mesh, int x, int y);

// Signed area (twice) of a 2D triangle; positive when counter-clockwise.
inline double edge_function(const Vec2& a, const Vec2& b, const Vec2& p) {
  return (b.x() - a.x()) * (p.y() - a.y()) - (b.y() - a.y()) * (p.x() - a.x());
}

}  // namespace rocotex
