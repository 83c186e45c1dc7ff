#include "rocotex/pipeline/pipeline.hpp"

#include <chrono>
#include <fstream>

#include <spdlog/spdlog.h>

#include "rocotex/io/png.hpp"
#include "rocotex/mask/confidence.hpp"
#include "rocotex/mask/morphology.hpp"
#include "rocotex/pipeline/export.hpp"
#include "rocotex/raster/rasterizer.hpp"
#include "rocotex/raster/shading.hpp"
#include "rocotex/texture/bake.hpp"
#include "rocotex/texture/blend.hpp"
#include "rocotex/texture/extrapolate.hpp"

namespace rocotex {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct ViewState {
  CameraView view;
  GBuffer gbuffer;
  ViewImage render;
  MaskImage mask;
  MaskImage dilated;
  MaskImage strength;
  ControlMaps control;
};

double untextured_share(const TextureAtlas& atlas, const ViewState& a, const ViewState& b, const TriangleMesh& mesh,
                        float keep) {
  const auto covered = a.gbuffer.coverage().count() + b.gbuffer.coverage().count();
  if (covered == 0) return 0.0;
  const double open = untextured_mask(atlas, a.gbuffer, mesh, keep).sum() + untextured_mask(atlas, b.gbuffer, mesh, keep).sum();
  return open / double(covered);
}

void dump_debug(const std::filesystem::path& dir, int k, const GenerationRequest& req, const ViewImage& generated) {
  std::filesystem::create_directories(dir);
  const std::string p = "iter" + std::to_string(k) + "_";
  io::write_png(dir / (p + "input.png"), req.image);
  io::write_png(dir / (p + "output.png"), generated);
  io::write_png(dir / (p + "mask.png"), req.mask);
  io::write_png(dir / (p + "soft_mask.png"), req.soft_mask);
  io::write_png(dir / (p + "depth.png"), req.control.depth);
  io::write_png(dir / (p + "normal.png"), req.control.normal);
  io::write_png(dir / (p + "edge.png"), req.control.edge);
}

}  // namespace

std::vector<nlohmann::json> RunReport::json_lines() const {
  std::vector<nlohmann::json> lines;
  for (const auto& it : iterations) {
    lines.push_back({{"type", "iteration"},
                     {"index", it.index},
                     {"pair", it.label},
                     {"mask_pixels", it.mask_pixels},
                     {"untextured_before", it.untextured_before},
                     {"untextured_after", it.untextured_after},
                     {"coverage", it.coverage},
                     {"seam_energy", it.seam_energy},
                     {"backend_ms", it.backend_ms}});
  }
  lines.push_back({{"type", "summary"},
                   {"iterations", iterations.size()},
                   {"backend_calls", backend_calls},
                   {"coverage_before_fill", coverage_before_fill},
                   {"final_coverage", final_coverage},
                   {"final_seam_energy", final_seam_energy},
                   {"extrapolation_passes", extrapolation_passes},
                   {"total_ms", total_ms}});
  return lines;
}

void write_report(const RunReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  for (const auto& line : report.json_lines()) out << line.dump() << "\n";
}

RunResult run(const TriangleMesh& input, const PromptSpec& prompt, const PipelineConfig& config, Generator& generator,
              const RunHooks& hooks) {
  config.validate();
  if (input.empty()) throw MeshError("mesh has no triangles");
  const auto start = Clock::now();

  RunResult result;
  result.mesh = normalize_mesh(input);
  const TriangleMesh& mesh = result.mesh;
  const auto schedule = view_schedule(config.schedule());
  const int res = config.atlas_resolution;
  const float keep = config.keep_threshold;
  const double radius = config.effective_dilation_radius();
  const double sigma = config.effective_blur_sigma();
  const BakeOptions bake_options{config.alpha, config.confidence_law, config.depth_bias};

  TextureAtlas atlas(res);
  const UvRaster uv = rasterize_uv(mesh, res);
  result.chart_mask = uv.chart_mask();
  result.seam_boundary = Plane<bool>::Constant(res, res, false);

  spdlog::info("texturing {} triangles: {} pair(s), {}x{} views, {}^2 atlas, backend {}", mesh.triangles.size(),
               schedule.size(), config.view_width, config.view_height, res, generator.name());

  for (int k = 0; k < static_cast<int>(schedule.size()); ++k) {
    const ViewPair& pair = schedule[k];
    try {
      IterationRecord rec;
      rec.index = k;
      rec.label = pair.label;

      ViewState views[2];
      views[0].view = pair.view_i;
      views[1].view = pair.view_j;
      for (auto& v : views) {
        v.gbuffer = rasterize(mesh, v.view);
        v.render = render_color(v.gbuffer, mesh, atlas, keep, config.neutral);
        v.mask = untextured_mask(atlas, v.gbuffer, mesh, keep);
        v.dilated = dilate(v.mask, radius);
        v.strength = config.soft_inpainting ? soft_mask(v.dilated, sigma) : v.dilated;
        v.control = control_maps(v.gbuffer, v.view, config.edges);
        rec.mask_pixels += static_cast<long long>(v.mask.sum());
      }
      rec.untextured_before = untextured_share(atlas, views[0], views[1], mesh, keep);

      GenerationRequest req;
      req.image = concat(views[0].render, views[1].render);
      req.mask = concat(views[0].dilated, views[1].dilated);
      req.soft_mask = concat(views[0].strength, views[1].strength);
      req.control = concat(views[0].control, views[1].control);
      req.weights = config.weights;
      req.prompt = compose_regional(prompt, pair, req.width(), req.height());
      req.seed = config.seed + static_cast<std::uint64_t>(k);
      req.steps = config.steps;
      req.guidance = config.guidance;

      const auto t0 = Clock::now();
      GenerationResponse resp = generator.generate(req);
      rec.backend_ms = elapsed_ms(t0);
      ++result.report.backend_calls;
      if (resp.image.width() != req.width() || resp.image.height() != req.height())
        throw ProtocolError("generated image resolution differs from the request");
      if (!config.debug_dir.empty()) dump_debug(config.debug_dir, k, req, resp.image);

      auto [out_i, out_j] = split(resp.image);
      const ViewImage* generated[2] = {&out_i, &out_j};
      Plane<bool> boundary = Plane<bool>::Constant(res, res, false);
      for (int s = 0; s < 2; ++s) {
        const auto& v = views[s];
        const auto texels = project_texels(mesh, v.view, v.gbuffer, uv, config.depth_bias);
        const Plane<float> edge = project_plane(texels, v.dilated, res, 0.0f);
        boundary = boundary || (edge > 0.0f && edge < 1.0f);
        blend(atlas, bake_projected(texels, v.gbuffer, *generated[s], res, bake_options), config.epsilon);
        if (hooks.after_blend) hooks.after_blend(k, atlas);
      }
      result.seam_boundary = result.seam_boundary || boundary;

      rec.untextured_after = untextured_share(atlas, views[0], views[1], mesh, keep);
      rec.coverage = texel_coverage(atlas, result.chart_mask, keep);
      rec.seam_energy = seam_energy(atlas, boundary);
      spdlog::info("pair {} ({}): untextured {:.3f} -> {:.3f}, coverage {:.3f}, backend {:.0f} ms", k, pair.label,
                   rec.untextured_before, rec.untextured_after, rec.coverage, rec.backend_ms);
      result.report.iterations.push_back(rec);
    } catch (const std::exception& e) {
      if (!config.out_dir.empty()) {
        try {
          std::filesystem::create_directories(config.out_dir);
          io::write_png(config.out_dir / "partial_texture.png", atlas.color);
          write_confidence(atlas, config.out_dir / "partial_confidence.png");
        } catch (const std::exception& dump) {
          spdlog::error("could not dump partial atlas: {}", dump.what());
        }
      }
      throw PipelineError(k, pair.label, e.what());
    }
  }

  result.blended = atlas;
  result.report.coverage_before_fill = texel_coverage(atlas, result.chart_mask, keep);
  ExtrapolationStats stats;
  result.final_texture = extrapolate(atlas, result.chart_mask, keep, &stats);
  result.report.extrapolation_passes = stats.passes;
  result.report.final_coverage = texel_coverage(result.final_texture, result.chart_mask, keep);
  result.report.final_seam_energy = seam_energy(result.final_texture, result.seam_boundary);
  result.report.total_ms = elapsed_ms(start);
  return result;
}

RunResult run(const std::filesystem::path& mesh_path, const PromptSpec& prompt, const PipelineConfig& config,
              Generator& generator, const RunHooks& hooks) {
  const TriangleMesh mesh = load_mesh(mesh_path);
  RunResult result = run(mesh, prompt, config, generator, hooks);
  if (!config.out_dir.empty()) {
    const auto files = export_mesh(result.mesh, result.final_texture, config.out_dir);
    write_confidence(result.blended, config.out_dir / "confidence.png");
    write_report(result.report, config.out_dir / "report.jsonl");
    spdlog::info("wrote {}", files.obj.string());
  }
  return result;
}

}  // namespace rocotex
