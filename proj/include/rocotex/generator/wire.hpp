#pragma once

#include <json.hpp>

#include "rocotex/generator/generator.hpp"

namespace rocotex::wire {

inline constexpr int kProtocolVersion = 1;

// Request body:
// {
//   "protocol": 1, "width": W, "height": H,
//   "images": { "init", "mask", "soft_mask", "depth", "normal", "edge" },  // base64 PNG
//   "prompt": { "base", "negative", "regions": [{x, y, w, h, text}] },
//   "weights": { "depth", "normal", "edge" },
//   "seed": u64, "steps": n, "guidance": g
// }
nlohmann::json encode_request(const GenerationRequest& request);
GenerationRequest decode_request(const nlohmann::json& body);

// Response body: { "protocol": 1, "image": base64 PNG, "metadata": text }
nlohmann::json encode_response(const GenerationResponse& response);
// Throws ProtocolError on a malformed body or a resolution other than
// expected_width x expected_height.
GenerationResponse decode_response(const nlohmann::json& body, int expected_width, int expected_height);

}  // namespace rocotex::wire
