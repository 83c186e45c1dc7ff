#include "rocotex/geometry/camera.hpp"

#include <cmath>
#include <numbers>

namespace rocotex {

namespace {

double radians(double deg) { return deg * std::numbers::pi / 180.0; }

std::string pair_label(double azimuth, double elevation) {
  std::string label = std::lround(wrap_degrees(azimuth)) == 90 ? "right-left" : "front-back";
  if (elevation != 0.0) label += "@" + std::to_string(std::lround(elevation));
  return label;
}

}  // namespace

double wrap_degrees(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0) r += 360.0;
  return r;
}

Vec3 CameraView::eye() const {
  const double az = radians(azimuth);
  const double el = radians(elevation);
  return target + radius * Vec3(std::cos(el) * std::sin(az), std::sin(el), std::cos(el) * std::cos(az));
}

Mat4 CameraView::view_matrix() const {
  const Vec3 e = eye();
  const Vec3 forward = (target - e).normalized();
  Vec3 up = Vec3::UnitY();
  // Straight up or down: fall back to -Z/+Z as the up hint.
  if (std::abs(forward.dot(up)) > 1.0 - 1e-9) up = forward.y() > 0 ? Vec3(0, 0, 1) : Vec3(0, 0, -1);
  const Vec3 right = forward.cross(up).normalized();
  const Vec3 cam_up = right.cross(forward);

  Mat4 m = Mat4::Identity();
  m.block<1, 3>(0, 0) = right.transpose();
  m.block<1, 3>(1, 0) = cam_up.transpose();
  m.block<1, 3>(2, 0) = -forward.transpose();
  m(0, 3) = -right.dot(e);
  m(1, 3) = -cam_up.dot(e);
  m(2, 3) = forward.dot(e);
  return m;
}

Mat4 CameraView::projection_matrix(double n, double f) const {
  const double t = 1.0 / std::tan(radians(fov_y) / 2.0);
  Mat4 p = Mat4::Zero();
  p(0, 0) = t / aspect();
  p(1, 1) = t;
  p(2, 2) = (f + n) / (n - f);
  p(2, 3) = 2.0 * f * n / (n - f);
  p(3, 2) = -1.0;
  return p;
}

CameraView::Projected CameraView::project(const Vec3& world) const {
  const Vec4 cam = view_matrix() * world.homogeneous();
  const double depth = -cam.z();
  const double t = 1.0 / std::tan(radians(fov_y) / 2.0);
  const double ndc_x = t / aspect() * cam.x() / depth;
  const double ndc_y = t * cam.y() / depth;
  return {(ndc_x + 1.0) * 0.5 * width, (1.0 - ndc_y) * 0.5 * height, depth};
}

Vec3 CameraView::ray_direction(double px, double py) const {
  const double t = std::tan(radians(fov_y) / 2.0);
  const double ndc_x = 2.0 * px / width - 1.0;
  const double ndc_y = 1.0 - 2.0 * py / height;
  const Vec3 cam_dir(ndc_x * t * aspect(), ndc_y * t, -1.0);
  const Mat3 rot = view_matrix().topLeftCorner<3, 3>();
  return (rot.transpose() * cam_dir).normalized();
}

std::vector<ViewPair> view_schedule(const ViewScheduleConfig& config) {
  if (config.pair_count < 1) throw ConfigError("view schedule needs at least one pair");
  if (config.pair_count > kMaxViewPairs)
    throw ConfigError("view schedule supports at most " + std::to_string(kMaxViewPairs) + " pairs");
  if (config.width < 1 || config.height < 1) throw ConfigError("view resolution must be positive");

  std::vector<ViewPair> out;
  for (int k = 0; k < config.pair_count; ++k) {
    const double azimuth = (k % 2) * 90.0;
    double elevation = config.elevation;
    if (k >= 2) elevation = k < 4 ? config.extra_elevation : -config.extra_elevation;

    CameraView vi;
    vi.azimuth = azimuth;
    vi.elevation = elevation;
    vi.radius = config.radius;
    vi.fov_y = config.fov_y;
    vi.width = config.width;
    vi.height = config.height;
    CameraView vj = vi;
    vj.azimuth = wrap_degrees(azimuth + 180.0);
    out.push_back({vi, vj, pair_label(azimuth, elevation)});
  }
  return out;
}

}  // namespace rocotex
