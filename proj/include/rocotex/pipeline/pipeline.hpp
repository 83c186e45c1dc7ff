#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rocotex/generator/generator.hpp"
#include "rocotex/geometry/mesh.hpp"
#include "rocotex/pipeline/config.hpp"
#include "rocotex/prompting/regional_prompt.hpp"
#include "rocotex/texture/atlas.hpp"

namespace rocotex {

// Error raised inside the loop, tagged with the iteration it came from.
class PipelineError : public Error {
 public:
  PipelineError(int iteration, const std::string& label, const std::string& what)
      : Error("iteration " + std::to_string(iteration) + " (" + label + "): " + what), iteration_(iteration) {}
  [[nodiscard]] int iteration() const { return iteration_; }

 private:
  int iteration_;
};

struct IterationRecord {
  int index = 0;
  std::string label;
  long long mask_pixels = 0;         // undilated untextured pixels, both views
  double untextured_before = 0;      // share of covered pixels, both views
  double untextured_after = 0;
  double coverage = 0;               // share of chart texels with C* >= keep threshold
  double seam_energy = 0;            // on this iteration's mask boundary
  double backend_ms = 0;
};

struct RunReport {
  std::vector<IterationRecord> iterations;
  double coverage_before_fill = 0;
  double final_coverage = 0;        // after extrapolation
  double final_seam_energy = 0;     // union of all mask boundaries, final texture
  int backend_calls = 0;
  int extrapolation_passes = 0;
  double total_ms = 0;

  // One JSON object per iteration followed by a summary object.
  [[nodiscard]] std::vector<nlohmann::json> json_lines() const;
};

struct RunResult {
  TriangleMesh mesh;          // normalized
  TextureAtlas blended;       // T*, C* after the last blend
  TextureAtlas final_texture; // after extrapolation
  Plane<bool> chart_mask;
  Plane<bool> seam_boundary;  // texels on a dilated-mask edge in some view
  RunReport report;
};

struct RunHooks {
  // Called after every blend with the iteration index and the atlas.
  std::function<void(int, const TextureAtlas&)> after_blend;
};

RunResult run(const TriangleMesh& mesh, const PromptSpec& prompt, const PipelineConfig& config, Generator& generator,
              const RunHooks& hooks = {});

// Loads the mesh, runs, and writes model.obj / model.mtl / texture.png and
// report.jsonl into config.out_dir when it is set.
RunResult run(const std::filesystem::path& mesh_path, const PromptSpec& prompt, const PipelineConfig& config,
              Generator& generator, const RunHooks& hooks = {});

void write_report(const RunReport& report, const std::filesystem::path& path);

}  // namespace rocotex
