#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rocotex/core/types.hpp"

namespace rocotex::io {

// 8-bit PNG encode/decode. Values are clamped to [0, 1] and rounded to the
// nearest of 256 levels.
std::vector<std::uint8_t> encode_png(const ViewImage& image);
std::vector<std::uint8_t> encode_png(const Plane<float>& gray);

ViewImage decode_png_rgb(const std::vector<std::uint8_t>& bytes);
Plane<float> decode_png_gray(const std::vector<std::uint8_t>& bytes);

void write_png(const std::filesystem::path& path, const ViewImage& image);
void write_png(const std::filesystem::path& path, const Plane<float>& gray);
ViewImage read_png_rgb(const std::filesystem::path& path);

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(const std::string& text);

inline std::uint8_t quantize(float v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0f, 1.0f) * 255.0f));
}

}  // namespace rocotex::io
