#pragma once

#include "rocotex/core/types.hpp"

namespace rocotex {

// Exact squared Euclidean distance from every pixel to the nearest pixel
// where `seed` is true; +inf when there is none.
Plane<double> squared_distance_transform(const Plane<bool>& seed);

// Euclidean dilation: a pixel is set iff some set pixel lies within `radius`.
MaskImage dilate(const MaskImage& mask, double radius);

// Dilation radius for a view `width` pixels wide, scaled from `base_radius`
// at `reference_width`.
double scaled_dilation_radius(int width, double base_radius = 24.0, int reference_width = 1024);

// Normalized Gaussian blur whose support is the disk of radius 3 sigma,
// edge-clamped. Pixels whose whole support agrees are copied unchanged.
MaskImage soft_mask(const MaskImage& mask, double sigma);

}  // namespace rocotex
