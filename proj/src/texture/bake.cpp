#include "rocotex/texture/bake.hpp"

#include <cmath>

namespace rocotex {

UvRaster rasterize_uv(const TriangleMesh& mesh, int resolution) {
  if (resolution < 1) throw Error("rasterize_uv: resolution must be positive");
  UvRaster out{Plane<int>::Constant(resolution, resolution, -1), Raster<float, 3>(resolution, resolution)};
  for (int tri = 0; tri < static_cast<int>(mesh.triangles.size()); ++tri) {
    const Vec3i& idx = mesh.triangles[tri];
    const Vec2 a = uv_to_texel(mesh.uvs[idx[0]], resolution);
    const Vec2 b = uv_to_texel(mesh.uvs[idx[1]], resolution);
    const Vec2 c = uv_to_texel(mesh.uvs[idx[2]], resolution);
    const double area = edge_function(a, b, c);
    if (area == 0.0) continue;
    const int x0 = std::max(0, static_cast<int>(std::ceil(std::min({a.x(), b.x(), c.x()}))));
    const int x1 = std::min(resolution - 1, static_cast<int>(std::floor(std::max({a.x(), b.x(), c.x()}))));
    const int y0 = std::max(0, static_cast<int>(std::ceil(std::min({a.y(), b.y(), c.y()}))));
    const int y1 = std::min(resolution - 1, static_cast<int>(std::floor(std::max({a.y(), b.y(), c.y()}))));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        if (out.triangle(y, x) >= 0) continue;
        const Vec2 p(x, y);
        const Vec3 lambda(edge_function(b, c, p) / area, edge_function(c, a, p) / area, edge_function(a, b, p) / area);
        if (lambda.minCoeff() < 0.0) continue;
        out.triangle(y, x) = tri;
        out.barycentric.set(x, y, lambda);
      }
    }
  }
  return out;
}

namespace {

// Bilinear lookup over covered taps only; +inf when no tap is covered.
double covered_bilinear(const GBuffer& g, const Plane<float>& plane, double x, double y) {
  const int w = g.width();
  const int h = g.height();
  x = std::clamp(x, 0.0, double(w - 1));
  y = std::clamp(y, 0.0, double(h - 1));
  const int x0 = std::min(static_cast<int>(x), w - 1);
  const int y0 = std::min(static_cast<int>(y), h - 1);
  const int xs[2] = {x0, std::min(x0 + 1, w - 1)};
  const int ys[2] = {y0, std::min(y0 + 1, h - 1)};
  const double fx = x - x0;
  const double fy = y - y0;
  const double wx[2] = {1 - fx, fx};
  const double wy[2] = {1 - fy, fy};
  double acc = 0, total = 0;
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) {
      const double wgt = wx[i] * wy[j];
      if (wgt <= 0 || !g.covered(xs[i], ys[j])) continue;
      acc += wgt * plane(ys[j], xs[i]);
      total += wgt;
    }
  }
  return total > 0 ? acc / total : std::numeric_limits<double>::infinity();
}

}  // namespace

std::vector<TexelProjection> project_texels(const TriangleMesh& mesh, const CameraView& view, const GBuffer& g,
                                            const UvRaster& uv, double depth_bias) {
  std::vector<TexelProjection> out;
  const Vec3 eye = view.eye();
  const int n = uv.resolution();
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const int tri = uv.triangle(y, x);
      if (tri < 0) continue;
      const Vec3i& idx = mesh.triangles[tri];
      const Vec3 b = uv.barycentric.at(x, y).cast<double>();
      const Vec3 p = b[0] * mesh.positions[idx[0]] + b[1] * mesh.positions[idx[1]] + b[2] * mesh.positions[idx[2]];
      Vec3 nrm = b[0] * mesh.normals[idx[0]] + b[1] * mesh.normals[idx[1]] + b[2] * mesh.normals[idx[2]];
      nrm = nrm.norm() > 0 ? nrm.normalized() : mesh.face_normal(tri);
      const double cos_angle = nrm.dot((eye - p).normalized());
      if (!(cos_angle > 0.0)) continue;
      const auto proj = view.project(p);
      if (!(proj.depth > view.near_plane()) || proj.x < 0 || proj.y < 0 || proj.x >= view.width || proj.y >= view.height)
        continue;
      // Slope-scaled tolerance: the depth of an oblique surface changes by
      // pixel_size * tan(angle) across one pixel.
      const double pixel = 2.0 * proj.depth * std::tan(0.5 * view.fov_y * M_PI / 180.0) / view.height;
      const double slope = std::sqrt(std::max(0.0, 1.0 - cos_angle * cos_angle)) / cos_angle;
      const double tolerance = depth_bias + 1.5 * pixel * std::min(slope, 10.0);
      if (proj.depth > covered_bilinear(g, g.depth, proj.x - 0.5, proj.y - 0.5) + tolerance) continue;
      out.push_back({x, y, proj.x, proj.y, cos_angle});
    }
  }
  return out;
}

LocalBake bake_projected(const std::vector<TexelProjection>& texels, const GBuffer& g, const ViewImage& image,
                         int atlas_resolution, const BakeOptions& options) {
  if (image.width() != g.width() || image.height() != g.height())
    throw Error("bake: image and G-buffer differ in resolution");
  LocalBake bake{atlas_resolution, {}};
  bake.texels.reserve(texels.size());
  for (const auto& t : texels) {
    const double c = confidence_from_cos(t.cos_angle, options.alpha, options.law);
    if (!(c > 0.0)) continue;
    Vec3f color;
    // Background pixels never contribute color.
    for (int ch = 0; ch < 3; ++ch)
      color[ch] = static_cast<float>(covered_bilinear(g, image[ch], t.px - 0.5, t.py - 0.5));
    bake.texels.push_back({t.x, t.y, color, static_cast<float>(std::min(c, 1.0))});
  }
  return bake;
}

LocalBake bake_view(const TriangleMesh& mesh, const CameraView& view, const GBuffer& g, const ViewImage& image,
                    const UvRaster& uv, const BakeOptions& options) {
  return bake_projected(project_texels(mesh, view, g, uv, options.depth_bias), g, image, uv.resolution(), options);
}

LocalBake bake_view(const TriangleMesh& mesh, const CameraView& view, const GBuffer& g, const ViewImage& image,
                    int atlas_resolution, const BakeOptions& options) {
  return bake_view(mesh, view, g, image, rasterize_uv(mesh, atlas_resolution), options);
}

Plane<float> project_plane(const std::vector<TexelProjection>& texels, const Plane<float>& plane, int resolution,
                           float fill) {
  Plane<float> out = Plane<float>::Constant(resolution, resolution, fill);
  for (const auto& t : texels) out(t.y, t.x) = sample_bilinear(plane, t.px - 0.5, t.py - 0.5);
  return out;
}

}  // namespace rocotex
