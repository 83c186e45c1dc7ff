#include "rocotex/pipeline/export.hpp"

#include <fstream>

#include "rocotex/io/png.hpp"

namespace rocotex {

ExportedFiles export_mesh(const TriangleMesh& mesh, const TextureAtlas& texture, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create output directory " + out_dir.string() + ": " + ec.message());

  ExportedFiles files{out_dir / "model.obj", out_dir / "model.mtl", out_dir / "texture.png"};
  save_obj(mesh, files.obj, "model.mtl", "textured");

  std::ofstream mtl(files.mtl, std::ios::binary);
  if (!mtl) throw Error("cannot write " + files.mtl.string());
  mtl << "newmtl textured\n"
      << "Ka 1 1 1\n"
      << "Kd 1 1 1\n"
      << "Ks 0 0 0\n"
      << "illum 1\n"
      << "map_Kd texture.png\n";
  if (!mtl) throw Error("failed writing " + files.mtl.string());

  io::write_png(files.texture, texture.color);
  return files;
}

void write_confidence(const TextureAtlas& atlas, const std::filesystem::path& path) {
  io::write_png(path, atlas.confidence);
}

}  // namespace rocotex
