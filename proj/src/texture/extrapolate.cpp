#include "rocotex/texture/extrapolate.hpp"

#include <cmath>

#include "rocotex/texture/bake.hpp"

namespace rocotex {

TextureAtlas extrapolate(const TextureAtlas& atlas, const Plane<bool>& chart_mask, float keep_threshold,
                         ExtrapolationStats* stats) {
  const int n = atlas.resolution();
  if (chart_mask.rows() != n || chart_mask.cols() != n) throw Error("extrapolate: chart mask resolution mismatch");
  if (!(atlas.confidence >= keep_threshold).any()) throw Error("empty texture");

  TextureAtlas cur = atlas;
  TextureAtlas next = atlas;
  ExtrapolationStats local;
  int gutter_left = kGutterTexels;
  const int max_passes = 2 * n + kGutterTexels;
  for (int pass = 0; pass < max_passes; ++pass) {
    const bool chart_done = !(chart_mask && (cur.confidence < keep_threshold)).any();
    if (chart_done) {
      if (gutter_left == 0) break;
      --gutter_left;
    }
    int filled = 0;
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        if (cur.confidence(y, x) >= keep_threshold) continue;
        Eigen::Vector3d acc = Eigen::Vector3d::Zero();
        double weight = 0;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = x + dx;
            const int ny = y + dy;
            if ((dx == 0 && dy == 0) || nx < 0 || ny < 0 || nx >= n || ny >= n) continue;
            const double c = cur.confidence(ny, nx);
            if (c < keep_threshold) continue;
            acc += c * cur.color.at(nx, ny).cast<double>();
            weight += c;
          }
        }
        if (weight == 0) continue;
        next.color.set(x, y, acc / weight);
        next.confidence(y, x) = keep_threshold;
        ++filled;
      }
    }
    if (filled == 0) break;
    local.filled += filled;
    ++local.passes;
    cur.color = next.color;
    cur.confidence = next.confidence;
  }
  if (stats) *stats = local;
  return cur;
}

TextureAtlas extrapolate(const TextureAtlas& atlas, const TriangleMesh& mesh, float keep_threshold,
                         ExtrapolationStats* stats) {
  return extrapolate(atlas, rasterize_uv(mesh, atlas.resolution()).chart_mask(), keep_threshold, stats);
}

double texel_coverage(const TextureAtlas& atlas, const Plane<bool>& chart_mask, float keep_threshold) {
  const auto total = chart_mask.count();
  if (total == 0) return 0.0;
  return double((chart_mask && (atlas.confidence >= keep_threshold)).count()) / double(total);
}

double seam_energy(const TextureAtlas& atlas, const Plane<bool>& boundary) {
  const int n = atlas.resolution();
  const auto at = [&](int c, int x, int y) {
    return double(atlas.color[c](std::clamp(y, 0, n - 1), std::clamp(x, 0, n - 1)));
  };
  double sum = 0;
  long count = 0;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if (!boundary(y, x)) continue;
      double g2 = 0;
      for (int c = 0; c < 3; ++c) {
        const double gx = 0.5 * (at(c, x + 1, y) - at(c, x - 1, y));
        const double gy = 0.5 * (at(c, x, y + 1) - at(c, x, y - 1));
        g2 += gx * gx + gy * gy;
      }
      sum += std::sqrt(g2);
      ++count;
    }
  }
  return count == 0 ? 0.0 : sum / double(count);
}

}  // namespace rocotex
