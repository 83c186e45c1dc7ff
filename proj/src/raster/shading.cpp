#include "rocotex/raster/shading.hpp"

#include <cmath>
#include <numbers>

namespace rocotex {

ViewImage render_color(const GBuffer& g, const TriangleMesh& mesh, const TextureAtlas& atlas, float keep_threshold,
                       float neutral, TextureFilter filter) {
  if (atlas.resolution() < 1) throw Error("render_color: empty atlas");
  ViewImage img(g.width(), g.height(), neutral);
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      if (!g.covered(x, y)) continue;
      img.set(x, y, sample_color(atlas, interpolate_uv(g, mesh, x, y), keep_threshold, neutral, filter));
    }
  }
  return img;
}

Plane<float> normalized_depth(const GBuffer& g) {
  const auto covered = g.coverage();
  Plane<float> d = Plane<float>::Zero(g.height(), g.width());
  if (!covered.any()) return d;
  const float d_near = covered.select(g.depth, std::numeric_limits<float>::infinity()).minCoeff();
  const float d_far = covered.select(g.depth, -std::numeric_limits<float>::infinity()).maxCoeff();
  const float range = d_far - d_near;
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      if (!covered(y, x)) continue;
      d(y, x) = range > 0 ? 0.05f + 0.95f * (d_far - g.depth(y, x)) / range : 1.0f;
    }
  }
  return d;
}

ControlMaps control_maps(const GBuffer& g, const CameraView& view, const EdgeThresholds& thresholds) {
  const int w = g.width();
  const int h = g.height();
  ControlMaps m;
  m.depth = normalized_depth(g);
  m.normal = Raster<float, 3>(w, h, 0.5f);
  m.edge = Plane<float>::Zero(h, w);

  const Mat3 rot = view.view_matrix().topLeftCorner<3, 3>();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!g.covered(x, y)) continue;
      const Vec3 n = rot * g.normal.at(x, y).cast<double>();
      m.normal.set(x, y, (n.array() + 1.0) * 0.5);
    }
  }

  const auto at = [&](int x, int y) {
    return m.depth(std::clamp(y, 0, h - 1), std::clamp(x, 0, w - 1));
  };
  const float cos_limit = static_cast<float>(std::cos(thresholds.normal_deg * std::numbers::pi / 180.0));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      // Sobel normalized so that a unit ramp per pixel has magnitude 1.
      const float gx = (at(x + 1, y - 1) + 2 * at(x + 1, y) + at(x + 1, y + 1) - at(x - 1, y - 1) -
                        2 * at(x - 1, y) - at(x - 1, y + 1)) / 8.0f;
      const float gy = (at(x - 1, y + 1) + 2 * at(x, y + 1) + at(x + 1, y + 1) - at(x - 1, y - 1) -
                        2 * at(x, y - 1) - at(x + 1, y - 1)) / 8.0f;
      bool edge = std::sqrt(gx * gx + gy * gy) > thresholds.depth;
      if (!edge && g.covered(x, y)) {
        const Vec3f n = g.normal.at(x, y);
        const int nx[4] = {x + 1, x - 1, x, x};
        const int ny[4] = {y, y, y + 1, y - 1};
        for (int k = 0; k < 4 && !edge; ++k) {
          if (nx[k] < 0 || nx[k] >= w || ny[k] < 0 || ny[k] >= h || !g.covered(nx[k], ny[k])) continue;
          edge = n.dot(g.normal.at(nx[k], ny[k])) < cos_limit;
        }
      }
      m.edge(y, x) = edge ? 1.0f : 0.0f;
    }
  }
  return m;
}

ControlMaps concat(const ControlMaps& a, const ControlMaps& b) {
  return {concat(a.depth, b.depth), concat(a.normal, b.normal), concat(a.edge, b.edge)};
}

std::pair<ControlMaps, ControlMaps> split(const ControlMaps& m) {
  auto [dl, dr] = split(m.depth);
  auto [nl, nr] = split(m.normal);
  auto [el, er] = split(m.edge);
  return {ControlMaps{std::move(dl), std::move(nl), std::move(el)}, ControlMaps{std::move(dr), std::move(nr), std::move(er)}};
}

}  // namespace rocotex
