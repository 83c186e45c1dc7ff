#pragma once

#include "rocotex/geometry/mesh.hpp"

namespace rocotex::primitives {

// Latitude/longitude sphere of the given radius. The uv chart is the
// equirectangular map inset by `uv_margin` on every side.
TriangleMesh uv_sphere(int segments = 48, int rings = 24, double radius = 1.0, double uv_margin = 0.02);

// Cube spanning [-half, half]^3 with one uv chart per face laid out on a
// 3x2 grid: 24 vertices, 12 triangles.
TriangleMesh cube(double half = 1.0, double uv_margin = 0.02);

// Square in the plane z = `z`, facing +Z, spanning [cx-half, cx+half] x
// [cy-half, cy+half], mapped to the uv rectangle [u0,u1] x [v0,v1].
TriangleMesh quad(double cx, double cy, double z, double half, double u0 = 0.0, double v0 = 0.0,
                  double u1 = 1.0, double v1 = 1.0);

// Concatenates meshes, offsetting indices.
TriangleMesh merge(const TriangleMesh& a, const TriangleMesh& b);

}  // namespace rocotex::primitives
