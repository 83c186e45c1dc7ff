#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rocotex/geometry/camera.hpp"

namespace rocotex {

struct PromptSpec {
  std::string base;
  std::string negative;
  // Direction label ("front", "back", "right side", "left side", "top") to
  // replacement phrase.
  std::map<std::string, std::string> overrides;
};

struct PixelRect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
  [[nodiscard]] long long area() const { return static_cast<long long>(w) * h; }
  bool operator==(const PixelRect&) const = default;
};

struct PromptRegion {
  PixelRect rect;
  std::string text;  // effective prompt, "<base>, <direction phrase>"
};

struct RegionalPrompt {
  std::string base;
  std::string negative;
  std::vector<PromptRegion> regions;

  // Index of the region containing pixel (x, y), or -1.
  [[nodiscard]] int region_at(int x, int y) const;
};

// Direction bucket for a camera: "front", "right side", "back", "left side"
// or "top" when the elevation exceeds 60 degrees.
std::string direction_label(const CameraView& view);

// "<label> view, (from <label>, <label> view focus)"
std::string direction_phrase(const CameraView& view);

// Left half of the concatenated image describes view_i, right half view_j.
RegionalPrompt compose_regional(const PromptSpec& spec, const ViewPair& pair, int image_width, int image_height);

// { base, negative, regions: [{x, y, w, h, text}] }
nlohmann::json to_json(const RegionalPrompt& prompt);
RegionalPrompt regional_prompt_from_json(const nlohmann::json& j);

}  // namespace rocotex
