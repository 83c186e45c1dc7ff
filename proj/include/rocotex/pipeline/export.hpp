#pragma once

#include <filesystem>

#include "rocotex/geometry/mesh.hpp"
#include "rocotex/texture/atlas.hpp"

namespace rocotex {

struct ExportedFiles {
  std::filesystem::path obj;
  std::filesystem::path mtl;
  std::filesystem::path texture;
};

// model.obj + model.mtl (map_Kd texture.png) + texture.png in `out_dir`.
ExportedFiles export_mesh(const TriangleMesh& mesh, const TextureAtlas& texture, const std::filesystem::path& out_dir);

// 8-bit grayscale dump of C*.
void write_confidence(const TextureAtlas& atlas, const std::filesystem::path& path);

}  // namespace rocotex
