#include "rocotex/geometry/primitives.hpp"

#include <cmath>
#include <numbers>

namespace rocotex::primitives {

TriangleMesh uv_sphere(int segments, int rings, double radius, double uv_margin) {
  TriangleMesh m;
  const double span = 1.0 - 2.0 * uv_margin;
  const auto vertex_index = [&](int ring, int seg) { return ring * (segments + 1) + seg; };
  for (int r = 0; r <= rings; ++r) {
    const double theta = std::numbers::pi * r / rings;  // 0 at +Y pole
    for (int s = 0; s <= segments; ++s) {
      const double phi = 2.0 * std::numbers::pi * s / segments;
      // phi = 0 faces +Z, increasing toward +X.
      const Vec3 n(std::sin(theta) * std::sin(phi), std::cos(theta), std::sin(theta) * std::cos(phi));
      m.positions.push_back(radius * n);
      m.normals.push_back(n);
      m.uvs.emplace_back(uv_margin + span * double(s) / segments, uv_margin + span * (1.0 - double(r) / rings));
    }
  }
  for (int r = 0; r < rings; ++r) {
    for (int s = 0; s < segments; ++s) {
      const int a = vertex_index(r, s);
      const int b = vertex_index(r + 1, s);
      const int c = vertex_index(r + 1, s + 1);
      const int d = vertex_index(r, s + 1);
      // Counter-clockwise seen from outside.
      if (r != 0) m.triangles.emplace_back(a, b, d);
      if (r != rings - 1) m.triangles.emplace_back(d, b, c);
    }
  }
  validate(m);
  return m;
}

TriangleMesh cube(double half, double uv_margin) {
  TriangleMesh m;
  struct Face {
    Vec3 n, u, v;
  };
  // u x v = n so that (0,0),(1,0),(1,1) winds counter-clockwise from outside.
  const Face faces[6] = {
      {Vec3::UnitZ(), Vec3::UnitX(), Vec3::UnitY()},   {-Vec3::UnitZ(), -Vec3::UnitX(), Vec3::UnitY()},
      {Vec3::UnitX(), -Vec3::UnitZ(), Vec3::UnitY()},  {-Vec3::UnitX(), Vec3::UnitZ(), Vec3::UnitY()},
      {Vec3::UnitY(), Vec3::UnitX(), -Vec3::UnitZ()},  {-Vec3::UnitY(), Vec3::UnitX(), Vec3::UnitZ()},
  };
  const double cell_w = 1.0 / 3.0;
  const double cell_h = 0.5;
  for (int f = 0; f < 6; ++f) {
    const auto& face = faces[f];
    const double u0 = (f % 3) * cell_w + uv_margin;
    const double v0 = (f / 3) * cell_h + uv_margin;
    const double du = cell_w - 2 * uv_margin;
    const double dv = cell_h - 2 * uv_margin;
    const int base = static_cast<int>(m.positions.size());
    const double corners[4][2] = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    for (const auto& c : corners) {
      m.positions.push_back(half * (face.n + c[0] * face.u + c[1] * face.v));
      m.normals.push_back(face.n);
      m.uvs.emplace_back(u0 + du * (c[0] + 1) / 2, v0 + dv * (c[1] + 1) / 2);
    }
    m.triangles.emplace_back(base, base + 1, base + 2);
    m.triangles.emplace_back(base, base + 2, base + 3);
  }
  validate(m);
  return m;
}

TriangleMesh quad(double cx, double cy, double z, double half, double u0, double v0, double u1, double v1) {
  TriangleMesh m;
  m.positions = {{cx - half, cy - half, z}, {cx + half, cy - half, z}, {cx + half, cy + half, z}, {cx - half, cy + half, z}};
  m.normals.assign(4, Vec3::UnitZ());
  m.uvs = {{u0, v0}, {u1, v0}, {u1, v1}, {u0, v1}};
  m.triangles = {{0, 1, 2}, {0, 2, 3}};
  validate(m);
  return m;
}

TriangleMesh merge(const TriangleMesh& a, const TriangleMesh& b) {
  TriangleMesh m = a;
  const int offset = static_cast<int>(a.positions.size());
  m.positions.insert(m.positions.end(), b.positions.begin(), b.positions.end());
  m.normals.insert(m.normals.end(), b.normals.begin(), b.normals.end());
  m.uvs.insert(m.uvs.end(), b.uvs.begin(), b.uvs.end());
  for (const auto& t : b.triangles) m.triangles.push_back(t + Vec3i::Constant(offset));
  return m;
}

}  // namespace rocotex::primitives
