#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include "rocotex/pipeline/pipeline.hpp"

namespace {

nlohmann::json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rocotex::ConfigError("cannot open config file " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw rocotex::ConfigError("config file " + path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Texture a UV-unwrapped mesh from a text prompt with symmetric-view inpainting."};

  std::string config_path, mesh, prompt, negative, backend, endpoint, debug_dir, out, law;
  std::uint64_t seed = 0;
  int pairs = 0, atlas = 0, retries = 0;
  std::vector<int> view_size;
  std::vector<double> weights;
  double dilate = 0, blur_sigma = 0, alpha = 0;
  float keep = 0;
  bool desk = false, binary_mask = false, verbose = false;

  app.add_option("--config", config_path, "JSON config file; command-line flags override it")->check(CLI::ExistingFile);
  app.add_option("--mesh", mesh, "Wavefront OBJ with uv coordinates");
  app.add_option("--prompt", prompt, "Base text prompt");
  app.add_option("--negative", negative, "Negative prompt");
  app.add_option("--backend", backend, "Generation backend")->check(CLI::IsMember({"mock", "http"}));
  app.add_option("--endpoint", endpoint, "Backend URL (default: $ROCOTEX_BACKEND_URL)");
  app.add_option("--seed", seed, "Generation seed");
  app.add_option("--pairs", pairs, "Number of symmetric view pairs")->check(CLI::Range(1, rocotex::kMaxViewPairs));
  app.add_option("--view-size", view_size, "Per-view width and height")->expected(2);
  app.add_option("--atlas", atlas, "Atlas resolution (texels per side)");
  app.add_option("--dilate", dilate, "Inpainting mask dilation radius in pixels");
  app.add_option("--blur-sigma", blur_sigma, "Soft mask Gaussian sigma in pixels");
  app.add_option("--alpha", alpha, "Confidence exponent");
  app.add_option("--confidence-law", law, "Confidence falloff")->check(CLI::IsMember({"cosine", "linear"}));
  app.add_option("--keep-thresh", keep, "Confidence below which a texel counts as untextured");
  app.add_option("--weights", weights, "Depth, normal and edge control weights")->expected(3);
  app.add_option("--retries", retries, "HTTP retries on transport failure");
  app.add_flag("--desk", desk, "Desk scale: 512x512 views, 512^2 atlas");
  app.add_flag("--binary-mask", binary_mask, "Send the dilated binary mask instead of the blurred one");
  app.add_option("--debug-dir", debug_dir, "Write per-iteration inputs and outputs here");
  app.add_option("--out", out, "Output directory");
  app.add_flag("-v,--verbose", verbose, "Log progress");

  CLI11_PARSE(app, argc, argv);
  spdlog::set_level(verbose ? spdlog::level::info : spdlog::level::warn);

  try {
    rocotex::PipelineConfig config;
    rocotex::PromptSpec spec;
    std::string mesh_path;
    if (!config_path.empty()) {
      const auto j = read_config(config_path);
      rocotex::apply_json(config, j);
      mesh_path = j.value("mesh", std::string{});
      spec.base = j.value("prompt", std::string{});
      spec.negative = j.value("negative", std::string{});
      if (j.contains("overrides")) spec.overrides = j.at("overrides").get<std::map<std::string, std::string>>();
    }

    nlohmann::json cli;
    const auto given = [&](const char* name) { return app.count(name) > 0; };
    if (desk) cli["desk"] = true;
    if (given("--view-size")) cli["view_size"] = view_size;
    if (given("--atlas")) cli["atlas"] = atlas;
    if (given("--pairs")) cli["pairs"] = pairs;
    if (given("--dilate")) cli["dilate"] = dilate;
    if (given("--blur-sigma")) cli["blur_sigma"] = blur_sigma;
    if (given("--alpha")) cli["alpha"] = alpha;
    if (given("--confidence-law")) cli["confidence_law"] = law;
    if (given("--keep-thresh")) cli["keep_thresh"] = keep;
    if (given("--weights")) cli["weights"] = weights;
    if (given("--backend")) cli["backend"] = backend;
    if (given("--endpoint")) cli["endpoint"] = endpoint;
    if (given("--seed")) cli["seed"] = seed;
    if (given("--retries")) cli["retries"] = retries;
    if (given("--debug-dir")) cli["debug_dir"] = debug_dir;
    if (given("--out")) cli["out"] = out;
    if (binary_mask) cli["soft_inpainting"] = false;
    if (!cli.empty()) rocotex::apply_json(config, cli);
    if (given("--mesh")) mesh_path = mesh;
    if (given("--prompt")) spec.base = prompt;
    if (given("--negative")) spec.negative = negative;

    if (mesh_path.empty()) throw rocotex::ConfigError("--mesh is required");
    if (spec.base.empty()) throw rocotex::ConfigError("--prompt is required");
    if (config.out_dir.empty()) throw rocotex::ConfigError("--out is required");

    auto generator = rocotex::make_generator(config);
    const auto result = rocotex::run(mesh_path, spec, config, *generator);
    for (const auto& line : result.report.json_lines()) std::cout << line.dump() << "\n";
  } catch (const rocotex::ConfigError& e) {
    std::cerr << "rocotex: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rocotex: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
