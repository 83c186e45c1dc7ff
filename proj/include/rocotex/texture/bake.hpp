#pragma once

#include <vector>

#include "rocotex/mask/confidence.hpp"
#include "rocotex/raster/rasterizer.hpp"
#include "rocotex/texture/atlas.hpp"

namespace rocotex {

// Uv-space rasterization of a mesh at atlas resolution: the owning triangle
// and affine barycentrics of every texel center. Texels outside all charts
// hold -1. Where triangles share an edge the lower triangle index wins.
struct UvRaster {
  Plane<int> triangle;
  Raster<float, 3> barycentric;

  [[nodiscard]] int resolution() const { return static_cast<int>(triangle.cols()); }
  [[nodiscard]] Plane<bool> chart_mask() const { return triangle >= 0; }
};

UvRaster rasterize_uv(const TriangleMesh& mesh, int resolution);

// A chart texel as seen from one view.
struct TexelProjection {
  int x = 0;
  int y = 0;
  double px = 0;  // continuous pixel coordinates in the view
  double py = 0;
  double cos_angle = 0;  // n . v toward the camera, > 0
};

// Chart texels that land inside the view frustum, face the camera and pass
// the depth test against `gbuffer`. The tolerance is `depth_bias` plus a
// slope term of 1.5 pixel footprints times tan(angle), capped at 10.
std::vector<TexelProjection> project_texels(const TriangleMesh& mesh, const CameraView& view, const GBuffer& gbuffer,
                                            const UvRaster& uv, double depth_bias);

struct BakedTexel {
  int x = 0;
  int y = 0;
  Vec3f color;
  float confidence = 0;  // in (0, 1]
};

// Local texture T_k and confidence C_k of one view; each texel at most once.
struct LocalBake {
  int resolution = 0;
  std::vector<BakedTexel> texels;
};

struct BakeOptions {
  double alpha = 1.0;
  ConfidenceLaw law = ConfidenceLaw::Cosine;
  double depth_bias = 1e-3;
};

// Back-projects `image` (rendered or generated from `view`) into uv space.
LocalBake bake_view(const TriangleMesh& mesh, const CameraView& view, const GBuffer& gbuffer, const ViewImage& image,
                    const UvRaster& uv, const BakeOptions& options = {});
LocalBake bake_view(const TriangleMesh& mesh, const CameraView& view, const GBuffer& gbuffer, const ViewImage& image,
                    int atlas_resolution, const BakeOptions& options = {});

// Bake from texels already projected into `gbuffer`'s view.
LocalBake bake_projected(const std::vector<TexelProjection>& texels, const GBuffer& gbuffer, const ViewImage& image,
                         int atlas_resolution, const BakeOptions& options = {});

// Samples a single-channel view-space plane at each projected texel; texels
// not seen by the view keep `fill`.
Plane<float> project_plane(const std::vector<TexelProjection>& texels, const Plane<float>& plane, int resolution,
                           float fill = 0.0f);

}  // namespace rocotex
