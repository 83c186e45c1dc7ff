#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include <Eigen/Dense>

namespace rocotex {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Vec3i = Eigen::Vector3i;

using Vec3f = Eigen::Vector3f;

// Single-channel image indexed (row, col) == (y, x), row 0 at the top.
template <typename Scalar>
using Plane = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Planar multi-channel image. All channels share one resolution.
template <typename Scalar, int Channels>
struct Raster {
  std::array<Plane<Scalar>, Channels> channels;

  Raster() = default;
  Raster(int width, int height, Scalar fill = Scalar(0)) {
    for (auto& c : channels) c = Plane<Scalar>::Constant(height, width, fill);
  }

  [[nodiscard]] int width() const { return static_cast<int>(channels[0].cols()); }
  [[nodiscard]] int height() const { return static_cast<int>(channels[0].rows()); }

  Plane<Scalar>& operator[](int c) { return channels[c]; }
  const Plane<Scalar>& operator[](int c) const { return channels[c]; }

  [[nodiscard]] Eigen::Matrix<Scalar, Channels, 1> at(int x, int y) const {
    Eigen::Matrix<Scalar, Channels, 1> v;
    for (int c = 0; c < Channels; ++c) v[c] = channels[c](y, x);
    return v;
  }

  template <typename Derived>
  void set(int x, int y, const Eigen::DenseBase<Derived>& v) {
    for (int c = 0; c < Channels; ++c) channels[c](y, x) = static_cast<Scalar>(v[c]);
  }

  bool operator==(const Raster& o) const {
    for (int c = 0; c < Channels; ++c) {
      if (channels[c].rows() != o.channels[c].rows() || channels[c].cols() != o.channels[c].cols()) return false;
      if ((channels[c] != o.channels[c]).any()) return false;
    }
    return true;
  }
};

// RGB image with channel values in [0, 1].
using ViewImage = Raster<float, 3>;
// Per-pixel confidence in [0, 1].
using ConfidenceImage = Plane<float>;
// Binary masks hold {0, 1}; soft masks hold [0, 1].
using MaskImage = Plane<float>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Horizontal concatenation, a on the left.
template <typename Scalar>
Plane<Scalar> concat(const Plane<Scalar>& a, const Plane<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("concat: mismatched dimensions");
  Plane<Scalar> out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

template <typename Scalar>
std::pair<Plane<Scalar>, Plane<Scalar>> split(const Plane<Scalar>& img) {
  if (img.cols() % 2 != 0) throw Error("split: width must be even");
  const auto half = img.cols() / 2;
  return {img.leftCols(half), img.rightCols(half)};
}

template <typename Scalar, int N>
Raster<Scalar, N> concat(const Raster<Scalar, N>& a, const Raster<Scalar, N>& b) {
  Raster<Scalar, N> out;
  for (int c = 0; c < N; ++c) out[c] = concat(a[c], b[c]);
  return out;
}

template <typename Scalar, int N>
std::pair<Raster<Scalar, N>, Raster<Scalar, N>> split(const Raster<Scalar, N>& img) {
  std::pair<Raster<Scalar, N>, Raster<Scalar, N>> out;
  for (int c = 0; c < N; ++c) std::tie(out.first[c], out.second[c]) = split(img[c]);
  return out;
}

// Bilinear lookup at continuous pixel coordinates (pixel centers at integer
// coordinates), edge-clamped.
template <typename Scalar>
Scalar sample_bilinear(const Plane<Scalar>& p, double x, double y) {
  const auto w = static_cast<int>(p.cols());
  const auto h = static_cast<int>(p.rows());
  x = std::clamp(x, 0.0, double(w - 1));
  y = std::clamp(y, 0.0, double(h - 1));
  const int x0 = std::min(static_cast<int>(x), w - 1);
  const int y0 = std::min(static_cast<int>(y), h - 1);
  const int x1 = std::min(x0 + 1, w - 1);
  const int y1 = std::min(y0 + 1, h - 1);
  const double fx = x - x0;
  const double fy = y - y0;
  const double top = (1 - fx) * double(p(y0, x0)) + fx * double(p(y0, x1));
  const double bottom = (1 - fx) * double(p(y1, x0)) + fx * double(p(y1, x1));
  return static_cast<Scalar>((1 - fy) * top + fy * bottom);
}

}  // namespace rocotex
