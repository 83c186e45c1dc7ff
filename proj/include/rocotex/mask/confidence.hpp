#pragma once

#include "rocotex/raster/rasterizer.hpp"
#include "rocotex/texture/atlas.hpp"

namespace rocotex {

enum class ConfidenceLaw {
  Cosine,  // (max(0, n.v))^alpha
  Linear,  // (max(0, 1 - theta / 90deg))^alpha
};

// Confidence from the cosine between the surface normal and the direction
// toward the camera; 0 for back-facing.
double confidence_from_cos(double cos_angle, double alpha, ConfidenceLaw law = ConfidenceLaw::Cosine);

// Confidence for a unit normal and unit direction toward the camera.
double confidence(const Vec3& normal, const Vec3& to_camera, double alpha, ConfidenceLaw law = ConfidenceLaw::Cosine);

ConfidenceImage view_confidence(const GBuffer& gbuffer, const CameraView& view, double alpha = 1.0,
                                ConfidenceLaw law = ConfidenceLaw::Cosine);

// 1 where a covered pixel samples C* below `keep_threshold`; background is 0.
MaskImage untextured_mask(const TextureAtlas& atlas, const GBuffer& gbuffer, const TriangleMesh& mesh,
                          float keep_threshold = 0.1f);

}  // namespace rocotex
