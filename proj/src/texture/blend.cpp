#include "rocotex/texture/blend.hpp"

namespace rocotex {

BlendedTexel blend_texel(const Vec3f& color, float conf, const Vec3f& local_color, float local_conf, double epsilon) {
  const double c = conf;
  const double ck = local_conf;
  const Eigen::Vector3d t = (color.cast<double>() * c + local_color.cast<double>() * ck) / (c + ck + epsilon);
  return {t.cast<float>(), static_cast<float>(c + ck - c * ck)};
}

void blend(TextureAtlas& atlas, const LocalBake& bake, double epsilon) {
  if (!(epsilon > 0)) throw Error("blend: epsilon must be positive");
  if (bake.resolution != atlas.resolution()) throw Error("blend: bake and atlas resolution differ");
  for (const auto& t : bake.texels) {
    const auto r = blend_texel(atlas.color.at(t.x, t.y), atlas.confidence(t.y, t.x), t.color, t.confidence, epsilon);
    atlas.color.set(t.x, t.y, r.color);
    atlas.confidence(t.y, t.x) = r.confidence;
  }
}

}  // namespace rocotex
