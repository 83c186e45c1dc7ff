#include "rocotex/generator/mock_generator.hpp"

#include <cmath>

namespace rocotex {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

float lattice(std::uint64_t seed, int ix, int iy) {
  const auto key = seed ^ splitmix64((static_cast<std::uint64_t>(static_cast<std::uint32_t>(ix)) << 32) |
                                     static_cast<std::uint32_t>(iy));
  return static_cast<float>(splitmix64(key) >> 40) / static_cast<float>(1u << 24);
}

float smooth(float t) { return t * t * (3.0f - 2.0f * t); }

float value_noise(std::uint64_t seed, int x, int y, int cell) {
  const int ix = x >= 0 ? x / cell : -((-x + cell - 1) / cell);
  const int iy = y >= 0 ? y / cell : -((-y + cell - 1) / cell);
  const float fx = smooth(static_cast<float>(x - ix * cell) / cell);
  const float fy = smooth(static_cast<float>(y - iy * cell) / cell);
  const float a = lattice(seed, ix, iy);
  const float b = lattice(seed, ix + 1, iy);
  const float c = lattice(seed, ix, iy + 1);
  const float d = lattice(seed, ix + 1, iy + 1);
  return (a * (1 - fx) + b * fx) * (1 - fy) + (c * (1 - fx) + d * fx) * fy;
}

}  // namespace

std::uint64_t region_seed(std::uint64_t seed, int region_index, std::string_view text) {
  return splitmix64(splitmix64(seed ^ 0x5eedULL) ^ splitmix64(static_cast<std::uint64_t>(region_index + 1)) ^ fnv1a(text));
}

Vec3f mock_pattern(std::uint64_t rseed, int x, int y) {
  Vec3f out;
  for (int c = 0; c < 3; ++c) {
    const std::uint64_t s = splitmix64(rseed + static_cast<std::uint64_t>(c));
    out[c] = 0.7f * value_noise(s, x, y, 48) + 0.3f * value_noise(s ^ 0xabcdefULL, x, y, 12);
  }
  return out;
}

GenerationResponse MockGenerator::generate(const GenerationRequest& request) {
  validate(request);
  const int w = request.width();
  const int h = request.height();
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < static_cast<int>(request.prompt.regions.size()); ++i)
    seeds.push_back(region_seed(request.seed, i, request.prompt.regions[i].text));
  const std::uint64_t fallback = region_seed(request.seed, -1, request.prompt.base);

  GenerationResponse out{request.image, "mock"};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const float m = request.soft_mask(y, x);
      if (m == 0.0f) continue;
      const int region = request.prompt.region_at(x, y);
      const Vec3f p = mock_pattern(region >= 0 ? seeds[region] : fallback, x, y);
      for (int c = 0; c < 3; ++c) out.image[c](y, x) = request.image[c](y, x) * (1.0f - m) + p[c] * m;
    }
  }
  return out;
}

}  // namespace rocotex
