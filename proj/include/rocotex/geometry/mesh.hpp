#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rocotex/core/types.hpp"

namespace rocotex {

class MeshError : public Error {
 public:
  MeshError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

// UV-unwrapped triangle mesh. Every vertex carries a position, a unit normal
// and a uv; a position shared by several uv charts is duplicated per chart.
struct TriangleMesh {
  std::vector<Vec3> positions;
  std::vector<Vec3> normals;
  std::vector<Vec2> uvs;
  std::vector<Vec3i> triangles;

  [[nodiscard]] bool empty() const { return triangles.empty(); }
  [[nodiscard]] std::size_t vertex_count() const { return positions.size(); }

  [[nodiscard]] double area(int tri) const;
  [[nodiscard]] double uv_area(int tri) const;
  [[nodiscard]] Vec3 face_normal(int tri) const;
};

// Checks index ranges, uv range and normal length, then drops triangles that
// are degenerate in position or uv space. Returns the number dropped.
int validate(TriangleMesh& mesh);

// Area-weighted vertex normals. `welding` maps each vertex to a position
// group so that vertices split along uv seams share one normal.
void compute_normals(TriangleMesh& mesh, const std::vector<int>& welding = {});

// Recenters the bounding-box center to the origin and scales the
// bounding-sphere radius (about that center) to 1.
TriangleMesh normalize_mesh(const TriangleMesh& mesh);

// Axis-aligned bounds.
struct Bounds {
  Vec3 min;
  Vec3 max;
  [[nodiscard]] Vec3 center() const { return 0.5 * (min + max); }
};
Bounds bounds(const TriangleMesh& mesh);
double bounding_radius(const TriangleMesh& mesh, const Vec3& center);

TriangleMesh load_mesh(const std::filesystem::path& path);
TriangleMesh parse_obj(const std::string& text);

// Writes v/vt/vn/f records; `mtl` adds mtllib/usemtl lines when non-empty.
std::string format_obj(const TriangleMesh& mesh, const std::string& mtl = {},
                       const std::string& material = {});
void save_obj(const TriangleMesh& mesh, const std::filesystem::path& path,
              const std::string& mtl = {}, const std::string& material = {});

}  // namespace rocotex
