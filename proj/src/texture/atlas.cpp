#include "rocotex/texture/atlas.hpp"

#include <cmath>

namespace rocotex {

namespace {

struct Taps {
  int x[2];
  int y[2];
  double w[2][2];
};

Taps bilinear_taps(const Vec2& uv, int n) {
  const Vec2 t = uv_to_texel(uv, n);
  const double tx = std::clamp(t.x(), 0.0, double(n - 1));
  const double ty = std::clamp(t.y(), 0.0, double(n - 1));
  const int x0 = std::min(static_cast<int>(tx), n - 1);
  const int y0 = std::min(static_cast<int>(ty), n - 1);
  const double fx = tx - x0;
  const double fy = ty - y0;
  Taps taps{{x0, std::min(x0 + 1, n - 1)}, {y0, std::min(y0 + 1, n - 1)}, {}};
  taps.w[0][0] = (1 - fx) * (1 - fy);
  taps.w[0][1] = fx * (1 - fy);
  taps.w[1][0] = (1 - fx) * fy;
  taps.w[1][1] = fx * fy;
  return taps;
}

}  // namespace

Vec3f sample_color(const TextureAtlas& atlas, const Vec2& uv, float keep_threshold, float neutral,
                   TextureFilter filter) {
  if (filter == TextureFilter::Nearest) {
    const int n = atlas.resolution();
    const Vec2 t = uv_to_texel(uv, n);
    const int x = std::clamp(static_cast<int>(std::lround(t.x())), 0, n - 1);
    const int y = std::clamp(static_cast<int>(std::lround(t.y())), 0, n - 1);
    return atlas.confidence(y, x) >= keep_threshold ? atlas.color.at(x, y) : Vec3f::Constant(neutral);
  }
  const Taps taps = bilinear_taps(uv, atlas.resolution());
  Eigen::Vector3d acc = Eigen::Vector3d::Zero();
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) {
      const int x = taps.x[i];
      const int y = taps.y[j];
      const Eigen::Vector3d c = atlas.confidence(y, x) >= keep_threshold
                                    ? Eigen::Vector3d(atlas.color.at(x, y).cast<double>())
                                    : Eigen::Vector3d::Constant(neutral);
      acc += taps.w[j][i] * c;
    }
  }
  return acc.cast<float>();
}

float sample_confidence(const TextureAtlas& atlas, const Vec2& uv) {
  const Taps taps = bilinear_taps(uv, atlas.resolution());
  double acc = 0;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) acc += taps.w[j][i] * atlas.confidence(taps.y[j], taps.x[i]);
  return static_cast<float>(acc);
}

}  // namespace rocotex
