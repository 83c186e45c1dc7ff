#pragma once

#include "rocotex/texture/atlas.hpp"
#include "rocotex/texture/bake.hpp"

namespace rocotex {

inline constexpr double kBlendEpsilon = 1e-8;

// Confidence-weighted merge of one texel:
//   T* <- (T* C* + T_k C_k) / (C* + C_k + eps)
//   C* <- C* + C_k - C* C_k
struct BlendedTexel {
  Vec3f color;
  float confidence;
};
BlendedTexel blend_texel(const Vec3f& color, float conf, const Vec3f& local_color, float local_conf,
                         double epsilon = kBlendEpsilon);

// Applies blend_texel to every baked texel in place; other texels untouched.
void blend(TextureAtlas& atlas, const LocalBake& bake, double epsilon = kBlendEpsilon);

}  // namespace rocotex
