#include "rocotex/generator/wire.hpp"

#include "rocotex/io/png.hpp"

namespace rocotex {

void validate(const GenerationRequest& r) {
  const int w = r.width();
  const int h = r.height();
  if (w < 1 || h < 1) throw ConfigError("generation request has an empty image");
  const auto same = [&](const auto& p) { return p.cols() == w && p.rows() == h; };
  if (!same(r.mask) || !same(r.soft_mask) || !same(r.control.depth) || !same(r.control.edge) ||
      r.control.normal.width() != w || r.control.normal.height() != h)
    throw ConfigError("generation request rasters differ in resolution");
  for (const double wgt : {r.weights.depth, r.weights.normal, r.weights.edge})
    if (!(wgt >= 0.0 && wgt <= 2.0)) throw ConfigError("control weights must lie in [0, 2]");
}

namespace wire {

namespace {

std::string png64(const ViewImage& img) { return io::base64_encode(io::encode_png(img)); }
std::string png64(const Plane<float>& img) { return io::base64_encode(io::encode_png(img)); }

ViewImage rgb_from(const nlohmann::json& j) { return io::decode_png_rgb(io::base64_decode(j.get<std::string>())); }
Plane<float> gray_from(const nlohmann::json& j) { return io::decode_png_gray(io::base64_decode(j.get<std::string>())); }

}  // namespace

nlohmann::json encode_request(const GenerationRequest& r) {
  validate(r);
  return {
      {"protocol", kProtocolVersion},
      {"width", r.width()},
      {"height", r.height()},
      {"images",
       {{"init", png64(r.image)},
        {"mask", png64(r.mask)},
        {"soft_mask", png64(r.soft_mask)},
        {"depth", png64(r.control.depth)},
        {"normal", png64(r.control.normal)},
        {"edge", png64(r.control.edge)}}},
      {"prompt", to_json(r.prompt)},
      {"weights", {{"depth", r.weights.depth}, {"normal", r.weights.normal}, {"edge", r.weights.edge}}},
      {"seed", r.seed},
      {"steps", r.steps},
      {"guidance", r.guidance},
  };
}

GenerationRequest decode_request(const nlohmann::json& body) {
  if (body.value("protocol", 0) != kProtocolVersion) throw ProtocolError("unsupported protocol version");
  GenerationRequest r;
  const auto& images = body.at("images");
  r.image = rgb_from(images.at("init"));
  r.mask = gray_from(images.at("mask"));
  r.soft_mask = gray_from(images.at("soft_mask"));
  r.control.depth = gray_from(images.at("depth"));
  r.control.normal = rgb_from(images.at("normal"));
  r.control.edge = gray_from(images.at("edge"));
  r.prompt = regional_prompt_from_json(body.at("prompt"));
  const auto& w = body.at("weights");
  r.weights = {w.at("depth").get<double>(), w.at("normal").get<double>(), w.at("edge").get<double>()};
  r.seed = body.at("seed").get<std::uint64_t>();
  r.steps = body.at("steps").get<int>();
  r.guidance = body.at("guidance").get<double>();
  return r;
}

nlohmann::json encode_response(const GenerationResponse& response) {
  return {{"protocol", kProtocolVersion}, {"image", png64(response.image)}, {"metadata", response.metadata}};
}

GenerationResponse decode_response(const nlohmann::json& body, int expected_width, int expected_height) {
  GenerationResponse out;
  try {
    if (!body.is_object() || !body.contains("image")) throw ProtocolError("response has no 'image' field");
    if (body.contains("protocol") && body.at("protocol").get<int>() != kProtocolVersion)
      throw ProtocolError("unsupported protocol version in response");
    out.image = rgb_from(body.at("image"));
    out.metadata = body.value("metadata", std::string{});
  } catch (const ProtocolError&) {
    throw;
  } catch (const std::exception& e) {
    throw ProtocolError(std::string("malformed response: ") + e.what());
  }
  if (out.image.width() != expected_width || out.image.height() != expected_height)
    throw ProtocolError("backend returned " + std::to_string(out.image.width()) + "x" +
                        std::to_string(out.image.height()) + ", expected " + std::to_string(expected_width) + "x" +
                        std::to_string(expected_height));
  return out;
}

}  // namespace wire
}  // namespace rocotex
