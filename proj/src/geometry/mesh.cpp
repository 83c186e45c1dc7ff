#include "rocotex/geometry/mesh.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include <spdlog/spdlog.h>

namespace rocotex {

namespace {

constexpr double kDegenerateArea = 1e-14;

double signed_area2(const Vec2& a, const Vec2& b, const Vec2& c) {
  return (b - a).x() * (c - a).y() - (b - a).y() * (c - a).x();
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const auto start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_double(std::string_view tok, int line) {
  double v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) throw MeshError("malformed number '" + std::string(tok) + "'", line);
  return v;
}

int parse_index(std::string_view tok, int count, int line) {
  int v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end || v == 0)
    throw MeshError("malformed index '" + std::string(tok) + "'", line);
  const int idx = v > 0 ? v - 1 : count + v;
  if (idx < 0 || idx >= count) throw MeshError("index " + std::to_string(v) + " out of range", line);
  return idx;
}

struct Corner {
  int v = -1;
  int vt = -1;
  int vn = -1;
  auto operator<=>(const Corner&) const = default;
};

}  // namespace

double TriangleMesh::area(int tri) const {
  const auto& t = triangles[tri];
  return 0.5 * (positions[t[1]] - positions[t[0]]).cross(positions[t[2]] - positions[t[0]]).norm();
}

double TriangleMesh::uv_area(int tri) const {
  const auto& t = triangles[tri];
  return 0.5 * std::abs(signed_area2(uvs[t[0]], uvs[t[1]], uvs[t[2]]));
}

Vec3 TriangleMesh::face_normal(int tri) const {
  const auto& t = triangles[tri];
  return (positions[t[1]] - positions[t[0]]).cross(positions[t[2]] - positions[t[0]]).normalized();
}

int validate(TriangleMesh& mesh) {
  const auto n = mesh.positions.size();
  if (mesh.normals.size() != n || mesh.uvs.size() != n)
    throw MeshError("attribute arrays have mismatched sizes");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& uv = mesh.uvs[i];
    if (!(uv.x() >= 0.0 && uv.x() <= 1.0 && uv.y() >= 0.0 && uv.y() <= 1.0))
      throw MeshError("uv coordinate outside [0, 1] at vertex " + std::to_string(i));
    if (std::abs(mesh.normals[i].norm() - 1.0) > 1e-4)
      throw MeshError("normal is not unit length at vertex " + std::to_string(i));
  }
  std::vector<Vec3i> kept;
  kept.reserve(mesh.triangles.size());
  for (int t = 0; t < static_cast<int>(mesh.triangles.size()); ++t) {
    const auto& tri = mesh.triangles[t];
    for (int k = 0; k < 3; ++k)
      if (tri[k] < 0 || tri[k] >= static_cast<int>(n))
        throw MeshError("triangle " + std::to_string(t) + " references vertex out of range");
    if (mesh.area(t) > kDegenerateArea && mesh.uv_area(t) > kDegenerateArea) kept.push_back(tri);
  }
  const int dropped = static_cast<int>(mesh.triangles.size() - kept.size());
  mesh.triangles = std::move(kept);
  return dropped;
}

void compute_normals(TriangleMesh& mesh, const std::vector<int>& welding) {
  const auto n = mesh.positions.size();
  std::vector<int> group(n);
  if (welding.empty()) {
    for (std::size_t i = 0; i < n; ++i) group[i] = static_cast<int>(i);
  } else {
    group = welding;
  }
  const int groups = n == 0 ? 0 : *std::max_element(group.begin(), group.end()) + 1;
  std::vector<Vec3> acc(groups, Vec3::Zero());
  for (const auto& t : mesh.triangles) {
    // Unnormalized cross product: magnitude is twice the area.
    const Vec3 fn = (mesh.positions[t[1]] - mesh.positions[t[0]]).cross(mesh.positions[t[2]] - mesh.positions[t[0]]);
    for (int k = 0; k < 3; ++k) acc[group[t[k]]] += fn;
  }
  mesh.normals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = acc[group[i]];
    mesh.normals[i] = a.norm() > 0 ? a.normalized() : Vec3::UnitZ();
  }
}

Bounds bounds(const TriangleMesh& mesh) {
  Bounds b{Vec3::Constant(std::numeric_limits<double>::infinity()),
           Vec3::Constant(-std::numeric_limits<double>::infinity())};
  for (const auto& p : mesh.positions) {
    b.min = b.min.cwiseMin(p);
    b.max = b.max.cwiseMax(p);
  }
  return b;
}

double bounding_radius(const TriangleMesh& mesh, const Vec3& center) {
  double r = 0;
  for (const auto& p : mesh.positions) r = std::max(r, (p - center).norm());
  return r;
}

TriangleMesh normalize_mesh(const TriangleMesh& mesh) {
  if (mesh.positions.empty()) throw MeshError("cannot normalize an empty mesh");
  const Vec3 c = bounds(mesh).center();
  const double r = bounding_radius(mesh, c);
  if (!(r > 1e-12)) throw MeshError("cannot normalize a degenerate mesh (all points coincide)");
  TriangleMesh out = mesh;
  for (auto& p : out.positions) p = (p - c) / r;
  return out;
}

TriangleMesh parse_obj(const std::string& text) {
  std::vector<Vec3> v;
  std::vector<Vec2> vt;
  std::vector<Vec3> vn;
  std::vector<std::array<Corner, 3>> faces;
  std::map<std::string, int> ignored;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const auto tok = tokenize(raw);
    if (tok.empty()) continue;
    const auto& kw = tok[0];
    if (kw == "v") {
      if (tok.size() < 4) throw MeshError("vertex record needs 3 coordinates", line_no);
      v.emplace_back(parse_double(tok[1], line_no), parse_double(tok[2], line_no), parse_double(tok[3], line_no));
    } else if (kw == "vt") {
      if (tok.size() < 3) throw MeshError("texture record needs 2 coordinates", line_no);
      vt.emplace_back(parse_double(tok[1], line_no), parse_double(tok[2], line_no));
    } else if (kw == "vn") {
      if (tok.size() < 4) throw MeshError("normal record needs 3 coordinates", line_no);
      vn.emplace_back(parse_double(tok[1], line_no), parse_double(tok[2], line_no), parse_double(tok[3], line_no));
    } else if (kw == "f") {
      if (tok.size() < 4) throw MeshError("face record needs at least 3 corners", line_no);
      std::vector<Corner> corners;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const auto t = tok[i];
        const auto s1 = t.find('/');
        Corner c;
        c.v = parse_index(t.substr(0, s1), static_cast<int>(v.size()), line_no);
        if (s1 == std::string_view::npos) throw MeshError("mesh must be UV-unwrapped", line_no);
        const auto rest = t.substr(s1 + 1);
        const auto s2 = rest.find('/');
        const auto vt_tok = rest.substr(0, s2);
        if (vt_tok.empty()) throw MeshError("mesh must be UV-unwrapped", line_no);
        c.vt = parse_index(vt_tok, static_cast<int>(vt.size()), line_no);
        if (s2 != std::string_view::npos && s2 + 1 < rest.size())
          c.vn = parse_index(rest.substr(s2 + 1), static_cast<int>(vn.size()), line_no);
        corners.push_back(c);
      }
      // Fan triangulation.
      for (std::size_t i = 1; i + 1 < corners.size(); ++i) {
        faces.push_back({corners[0], corners[i], corners[i + 1]});
      }
    } else {
      ++ignored[std::string(kw)];
    }
  }
  for (const auto& [kw, count] : ignored)
    spdlog::warn("obj: ignored {} '{}' record(s)", count, kw);

  bool have_normals = !faces.empty();
  for (const auto& f : faces)
    for (const auto& c : f) have_normals = have_normals && c.vn >= 0;

  TriangleMesh mesh;
  std::map<Corner, int> index;
  std::vector<int> welding;
  for (const auto& f : faces) {
    Vec3i tri;
    for (int k = 0; k < 3; ++k) {
      Corner key = f[k];
      if (!have_normals) key.vn = -1;
      auto [it, inserted] = index.try_emplace(key, static_cast<int>(mesh.positions.size()));
      if (inserted) {
        mesh.positions.push_back(v[key.v]);
        mesh.uvs.push_back(vt[key.vt]);
        mesh.normals.push_back(have_normals ? vn[key.vn].normalized() : Vec3::Zero());
        welding.push_back(key.v);
      }
      tri[k] = it->second;
    }
    mesh.triangles.push_back(tri);
  }
  if (!have_normals) compute_normals(mesh, welding);

  if (const int dropped = validate(mesh); dropped > 0)
    spdlog::warn("obj: dropped {} degenerate triangle(s)", dropped);
  return mesh;
}

TriangleMesh load_mesh(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MeshError("cannot open mesh file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_obj(ss.str());
}

std::string format_obj(const TriangleMesh& mesh, const std::string& mtl, const std::string& material) {
  std::ostringstream out;
  out.precision(9);
  if (!mtl.empty()) out << "mtllib " << mtl << "\n";
  for (const auto& p : mesh.positions) out << "v " << p.x() << ' ' << p.y() << ' ' << p.z() << "\n";
  for (const auto& t : mesh.uvs) out << "vt " << t.x() << ' ' << t.y() << "\n";
  for (const auto& n : mesh.normals) out << "vn " << n.x() << ' ' << n.y() << ' ' << n.z() << "\n";
  if (!material.empty()) out << "usemtl " << material << "\n";
  for (const auto& t : mesh.triangles) {
    out << 'f';
    for (int k = 0; k < 3; ++k) {
      const int i = t[k] + 1;
      out << ' ' << i << '/' << i << '/' << i;
    }
    out << "\n";
  }
  return out.str();
}

void save_obj(const TriangleMesh& mesh, const std::filesystem::path& path, const std::string& mtl,
              const std::string& material) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << format_obj(mesh, mtl, material);
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace rocotex
