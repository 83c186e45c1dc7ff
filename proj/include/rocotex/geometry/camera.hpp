#pragma once

#include <string>
#include <vector>

#include "rocotex/core/types.hpp"

namespace rocotex {

// Orbit camera looking at `target` with world +Y up. Angles in degrees.
// Azimuth 0 places the eye on +Z; azimuth 90 on +X.
struct CameraView {
  double azimuth = 0.0;
  double elevation = 0.0;
  double radius = 2.5;
  double fov_y = 40.0;
  int width = 1024;
  int height = 1024;
  Vec3 target = Vec3::Zero();

  [[nodiscard]] double aspect() const { return double(width) / double(height); }
  [[nodiscard]] Vec3 eye() const;
  // World to camera; the camera looks down its -Z axis.
  [[nodiscard]] Mat4 view_matrix() const;
  // OpenGL-style clip transform.
  [[nodiscard]] Mat4 projection_matrix(double near_plane, double far_plane) const;
  [[nodiscard]] double near_plane() const { return 0.02 * radius; }
  [[nodiscard]] double far_plane() const { return 10.0 * radius; }

  // Continuous pixel coordinates (pixel (x, y) spans [x, x+1) x [y, y+1),
  // row 0 at the top) plus view-space depth along the viewing axis.
  struct Projected {
    double x;
    double y;
    double depth;
  };
  [[nodiscard]] Projected project(const Vec3& world) const;

  // World-space ray direction through a continuous pixel coordinate.
  [[nodiscard]] Vec3 ray_direction(double px, double py) const;
};

struct ViewPair {
  CameraView view_i;
  CameraView view_j;
  std::string label;
};

struct ViewScheduleConfig {
  int pair_count = 2;
  double radius = 2.5;
  double fov_y = 40.0;
  double elevation = 0.0;
  // Elevation of the optional pairs beyond the first two. Pairs 3-4 sit at
  // +extra_elevation, pairs 5-6 at -extra_elevation.
  double extra_elevation = 45.0;
  int width = 1024;
  int height = 1024;
};

inline constexpr int kMaxViewPairs = 6;

std::vector<ViewPair> view_schedule(const ViewScheduleConfig& config);

// Wraps degrees into [0, 360).
double wrap_degrees(double deg);

}  // namespace rocotex
