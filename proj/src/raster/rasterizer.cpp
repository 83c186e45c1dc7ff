#include "rocotex/raster/rasterizer.hpp"

#include <cmath>
#include <numbers>

namespace rocotex {

GBuffer::GBuffer(int width, int height)
    : triangle(Plane<int>::Constant(height, width, -1)),
      barycentric(width, height),
      depth(Plane<float>::Constant(height, width, kBackground)),
      position(width, height),
      normal(width, height) {}

GBuffer rasterize(const TriangleMesh& mesh, const CameraView& view) {
  if (view.width < 1 || view.height < 1) throw Error("rasterize: zero-resolution view");
  GBuffer g(view.width, view.height);

  const Mat4 view_m = view.view_matrix();
  const double near_plane = view.near_plane();
  const double t = 1.0 / std::tan(view.fov_y * std::numbers::pi / 360.0);
  const double sx = 0.5 * view.width * t / view.aspect();
  const double sy = 0.5 * view.height * t;

  // Screen positions are kept with y pointing up so that counter-clockwise
  // (front-facing) triangles have positive area.
  const auto n = mesh.positions.size();
  std::vector<Vec2> screen(n);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec4 c = view_m * mesh.positions[i].homogeneous();
    w[i] = -c.z();
    const double inv = w[i] > 0 ? 1.0 / w[i] : 0.0;
    screen[i] = Vec2(0.5 * view.width + sx * c.x() * inv, -(0.5 * view.height - sy * c.y() * inv));
  }

  for (int tri = 0; tri < static_cast<int>(mesh.triangles.size()); ++tri) {
    const Vec3i& idx = mesh.triangles[tri];
    if (w[idx[0]] < near_plane || w[idx[1]] < near_plane || w[idx[2]] < near_plane) continue;
    const Vec2& a = screen[idx[0]];
    const Vec2& b = screen[idx[1]];
    const Vec2& c = screen[idx[2]];
    const double area = edge_function(a, b, c);
    if (!(area > 0.0)) continue;

    const double min_x = std::min({a.x(), b.x(), c.x()});
    const double max_x = std::max({a.x(), b.x(), c.x()});
    // Stored y is negated pixel row.
    const double min_row = -std::max({a.y(), b.y(), c.y()});
    const double max_row = -std::min({a.y(), b.y(), c.y()});
    const int x0 = std::max(0, static_cast<int>(std::ceil(min_x - 0.5)));
    const int x1 = std::min(view.width - 1, static_cast<int>(std::floor(max_x - 0.5)));
    const int y0 = std::max(0, static_cast<int>(std::ceil(min_row - 0.5)));
    const int y1 = std::min(view.height - 1, static_cast<int>(std::floor(max_row - 0.5)));

    const Vec3 inv_w(1.0 / w[idx[0]], 1.0 / w[idx[1]], 1.0 / w[idx[2]]);
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        const Vec2 p(x + 0.5, -(y + 0.5));
        const Vec3 lambda(edge_function(b, c, p) / area, edge_function(c, a, p) / area, edge_function(a, b, p) / area);
        if (lambda.minCoeff() < 0.0) continue;
        const Vec3 weighted = lambda.cwiseProduct(inv_w);
        const double denom = weighted.sum();
        const double depth = 1.0 / denom;
        if (!(depth < g.depth(y, x))) continue;
        const Vec3 bary = weighted / denom;
        const Vec3 pos = bary[0] * mesh.positions[idx[0]] + bary[1] * mesh.positions[idx[1]] + bary[2] * mesh.positions[idx[2]];
        Vec3 nrm = bary[0] * mesh.normals[idx[0]] + bary[1] * mesh.normals[idx[1]] + bary[2] * mesh.normals[idx[2]];
        nrm = nrm.norm() > 0 ? nrm.normalized() : mesh.face_normal(tri);
        g.triangle(y, x) = tri;
        g.depth(y, x) = static_cast<float>(depth);
        g.barycentric.set(x, y, bary);
        g.position.set(x, y, pos);
        g.normal.set(x, y, nrm);
      }
    }
  }
  return g;
}

Vec2 interpolate_uv(const GBuffer& g, const TriangleMesh& mesh, int x, int y) {
  const Vec3i& idx = mesh.triangles[g.triangle(y, x)];
  const Eigen::Vector3f b = g.barycentric.at(x, y);
  return double(b[0]) * mesh.uvs[idx[0]] + double(b[1]) * mesh.uvs[idx[1]] + double(b[2]) * mesh.uvs[idx[2]];
}

}  // namespace rocotex
