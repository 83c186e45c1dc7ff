#pragma once

#include <cstdint>
#include <string_view>

#include "rocotex/generator/generator.hpp"

namespace rocotex {

// Offline stand-in for a diffusion backend:
//   out = in * (1 - m) + P * m
// where m is the soft mask and P a value-noise field seeded per region from
// (seed, region index, region text). Bit-deterministic for a fixed request.
class MockGenerator final : public Generator {
 public:
  GenerationResponse generate(const GenerationRequest& request) override;
  [[nodiscard]] std::string name() const override { return "mock"; }
};

std::uint64_t region_seed(std::uint64_t seed, int region_index, std::string_view text);

// Pattern color in [0, 1] at pixel (x, y) for a region seed.
Vec3f mock_pattern(std::uint64_t region_seed, int x, int y);

}  // namespace rocotex
