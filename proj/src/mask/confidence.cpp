#include "rocotex/mask/confidence.hpp"

#include <cmath>
#include <numbers>

namespace rocotex {

double confidence_from_cos(double cos_angle, double alpha, ConfidenceLaw law) {
  const double c = std::clamp(cos_angle, -1.0, 1.0);
  if (c <= 0.0) return 0.0;
  double base = c;
  if (law == ConfidenceLaw::Linear) base = std::max(0.0, 1.0 - std::acos(c) / (std::numbers::pi / 2.0));
  return std::pow(base, alpha);
}

double confidence(const Vec3& normal, const Vec3& to_camera, double alpha, ConfidenceLaw law) {
  return confidence_from_cos(normal.dot(to_camera), alpha, law);
}

ConfidenceImage view_confidence(const GBuffer& g, const CameraView& view, double alpha, ConfidenceLaw law) {
  ConfidenceImage out = ConfidenceImage::Zero(g.height(), g.width());
  const Vec3 eye = view.eye();
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      if (!g.covered(x, y)) continue;
      const Vec3 p = g.position.at(x, y).cast<double>();
      const Vec3 n = g.normal.at(x, y).cast<double>().normalized();
      out(y, x) = static_cast<float>(confidence(n, (eye - p).normalized(), alpha, law));
    }
  }
  return out;
}

MaskImage untextured_mask(const TextureAtlas& atlas, const GBuffer& g, const TriangleMesh& mesh, float keep_threshold) {
  MaskImage m = MaskImage::Zero(g.height(), g.width());
  for (int y = 0; y < g.height(); ++y)
    for (int x = 0; x < g.width(); ++x)
      if (g.covered(x, y) && sample_confidence(atlas, interpolate_uv(g, mesh, x, y)) < keep_threshold) m(y, x) = 1.0f;
  return m;
}

}  // namespace rocotex
