#include "rocotex/mask/morphology.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace rocotex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lower envelope of parabolas (Felzenszwalb & Huttenlocher), in place.
void distance_1d(std::vector<double>& f, std::vector<double>& d, std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (f[q] == kInf) continue;
    if (k < 0) {
      v[0] = q;
      z[0] = -kInf;
      z[1] = kInf;
      k = 0;
      continue;
    }
    const auto intersect = [&](int p) {
      return ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * (q - p));
    };
    double s = intersect(v[k]);
    // z[0] is -inf, so this stops at k == 0.
    while (s <= z[k]) s = intersect(v[--k]);
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  if (k < 0) {
    std::fill(d.begin(), d.end(), kInf);
    return;
  }
  int j = 0;
  for (int q = 0; q < n; ++q) {
    while (z[j + 1] < q) ++j;
    const double dq = q - v[j];
    d[q] = dq * dq + f[v[j]];
  }
}

}  // namespace

Plane<double> squared_distance_transform(const Plane<bool>& seed) {
  const int h = static_cast<int>(seed.rows());
  const int w = static_cast<int>(seed.cols());
  Plane<double> out = seed.select(Plane<double>::Zero(h, w), Plane<double>::Constant(h, w, kInf));
  const int n = std::max(w, h);
  std::vector<double> f, d;
  std::vector<int> v(n);
  std::vector<double> z(n + 1);

  f.resize(h);
  d.resize(h);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) f[y] = out(y, x);
    distance_1d(f, d, v, z);
    for (int y = 0; y < h; ++y) out(y, x) = d[y];
  }
  f.resize(w);
  d.resize(w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) f[x] = out(y, x);
    distance_1d(f, d, v, z);
    for (int x = 0; x < w; ++x) out(y, x) = d[x];
  }
  return out;
}

MaskImage dilate(const MaskImage& mask, double radius) {
  if (radius < 0) throw Error("dilate: negative radius");
  const Plane<double> d2 = squared_distance_transform(mask > 0.5f);
  return (d2 <= radius * radius).cast<float>();
}

double scaled_dilation_radius(int width, double base_radius, int reference_width) {
  return base_radius * double(width) / double(reference_width);
}

MaskImage soft_mask(const MaskImage& mask, double sigma) {
  if (!(sigma > 0)) throw Error("soft_mask: sigma must be positive");
  const int h = static_cast<int>(mask.rows());
  const int w = static_cast<int>(mask.cols());
  const double reach = 3.0 * sigma;
  const int r = static_cast<int>(std::floor(reach));

  struct Tap {
    int dx, dy;
    double weight;
  };
  std::vector<Tap> taps;
  double total = 0;
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      const double d2 = double(dx) * dx + double(dy) * dy;
      if (d2 > reach * reach) continue;
      const double wgt = std::exp(-d2 / (2.0 * sigma * sigma));
      taps.push_back({dx, dy, wgt});
      total += wgt;
    }
  }
  for (auto& t : taps) t.weight /= total;

  const Plane<bool> ones = mask > 0.5f;
  const Plane<double> to_one = squared_distance_transform(ones);
  const Plane<double> to_zero = squared_distance_transform(!ones);
  const double reach2 = reach * reach;

  MaskImage out(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (to_zero(y, x) > reach2) {
        out(y, x) = 1.0f;
        continue;
      }
      if (to_one(y, x) > reach2) {
        out(y, x) = 0.0f;
        continue;
      }
      double acc = 0;
      for (const auto& t : taps)
        acc += t.weight * mask(std::clamp(y + t.dy, 0, h - 1), std::clamp(x + t.dx, 0, w - 1));
      out(y, x) = static_cast<float>(std::clamp(acc, 0.0, 1.0));
    }
  }
  return out;
}

}  // namespace rocotex
