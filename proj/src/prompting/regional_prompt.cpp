#include "rocotex/prompting/regional_prompt.hpp"

#include <cmath>

namespace rocotex {

int RegionalPrompt::region_at(int x, int y) const {
  for (int i = 0; i < static_cast<int>(regions.size()); ++i) {
    const auto& r = regions[i].rect;
    if (x >= r.x && x < r.x + r.w && y >= r.y && y < r.y + r.h) return i;
  }
  return -1;
}

std::string direction_label(const CameraView& view) {
  if (view.elevation > 60.0) return "top";
  static const char* kLabels[4] = {"front", "right side", "back", "left side"};
  const auto bucket = static_cast<int>(std::lround(wrap_degrees(view.azimuth) / 90.0)) % 4;
  return kLabels[bucket];
}

std::string direction_phrase(const CameraView& view) {
  const std::string d = direction_label(view);
  return d + " view, (from " + d + ", " + d + " view focus)";
}

namespace {

std::string region_text(const PromptSpec& spec, const CameraView& view) {
  const auto it = spec.overrides.find(direction_label(view));
  const std::string phrase = it != spec.overrides.end() ? it->second : direction_phrase(view);
  return spec.base + ", " + phrase;
}

}  // namespace

RegionalPrompt compose_regional(const PromptSpec& spec, const ViewPair& pair, int image_width, int image_height) {
  if (spec.base.empty()) throw ConfigError("base prompt must not be empty");
  if (image_width <= 0 || image_height <= 0 || image_width % 2 != 0)
    throw ConfigError("regional prompt needs a positive, even image width");
  const int half = image_width / 2;
  RegionalPrompt out;
  out.base = spec.base;
  out.negative = spec.negative;
  out.regions.push_back({{0, 0, half, image_height}, region_text(spec, pair.view_i)});
  out.regions.push_back({{half, 0, half, image_height}, region_text(spec, pair.view_j)});
  return out;
}

nlohmann::json to_json(const RegionalPrompt& prompt) {
  nlohmann::json regions = nlohmann::json::array();
  for (const auto& r : prompt.regions)
    regions.push_back({{"x", r.rect.x}, {"y", r.rect.y}, {"w", r.rect.w}, {"h", r.rect.h}, {"text", r.text}});
  return {{"base", prompt.base}, {"negative", prompt.negative}, {"regions", regions}};
}

RegionalPrompt regional_prompt_from_json(const nlohmann::json& j) {
  RegionalPrompt p;
  p.base = j.at("base").get<std::string>();
  p.negative = j.value("negative", std::string{});
  for (const auto& r : j.at("regions"))
    p.regions.push_back({{r.at("x").get<int>(), r.at("y").get<int>(), r.at("w").get<int>(), r.at("h").get<int>()},
                         r.at("text").get<std::string>()});
  return p;
}

}  // namespace rocotex
