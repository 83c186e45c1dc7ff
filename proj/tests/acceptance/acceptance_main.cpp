// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "requests.hpp"
#include "rocotex/generator/http_generator.hpp"
#include "rocotex/generator/mock_generator.hpp"
#include "rocotex/geometry/primitives.hpp"
#include "rocotex/mask/confidence.hpp"
#include "rocotex/mask/morphology.hpp"
#include "rocotex/pipeline/pipeline.hpp"
#include "rocotex/prompting/regional_prompt.hpp"
#include "rocotex/raster/shading.hpp"
#include "rocotex/texture/bake.hpp"
#include "rocotex/texture/blend.hpp"
#include "stub_server.hpp"

using namespace rocotex;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> check;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Vec3 surface_point(const TriangleMesh& m, const UvRaster& uv, int x, int y) {
  const Vec3i idx = m.triangles[uv.triangle(y, x)];
  const Vec3 b = uv.barycentric.at(x, y).cast<double>();
  return b[0] * m.positions[idx[0]] + b[1] * m.positions[idx[1]] + b[2] * m.positions[idx[2]];
}

Vec3 surface_normal(const TriangleMesh& m, const UvRaster& uv, int x, int y) {
  const Vec3i idx = m.triangles[uv.triangle(y, x)];
  const Vec3 b = uv.barycentric.at(x, y).cast<double>();
  return (b[0] * m.normals[idx[0]] + b[1] * m.normals[idx[1]] + b[2] * m.normals[idx[2]]).normalized();
}

Outcome blend_suite() {
  constexpr double eps = kBlendEpsilon;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<float> u(0.0f, 1.0f);
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vec3f t(u(rng), u(rng), u(rng));
    const Vec3f tk(u(rng), u(rng), u(rng));
    const float c = u(rng), ck = u(rng);
    const auto r = blend_texel(t, c, tk, ck, eps);
    bool ok = r.confidence >= 0.0f && r.confidence <= 1.0f;
    ok = ok && r.confidence >= std::max(c, ck) - 1e-12;
    ok = ok && blend_texel(tk, ck, t, c, eps).confidence == r.confidence;
    for (int k = 0; k < 3; ++k)
      ok = ok && r.color[k] >= std::min(t[k], tk[k]) - eps && r.color[k] <= std::max(t[k], tk[k]) + eps;
    violations += !ok;
  }
  const auto first = blend_texel(Vec3f::Zero(), 0.0f, Vec3f(0.2f, 0.4f, 0.6f), 1.0f, eps);
  const auto half = blend_texel(Vec3f::Zero(), 0.5f, Vec3f::Zero(), 0.5f, eps);
  const auto avg = blend_texel(Vec3f::Ones(), 1.0f, Vec3f::Zero(), 1.0f, eps);
  const bool examples = (first.color - Vec3f(0.2f, 0.4f, 0.6f)).cwiseAbs().maxCoeff() <= eps &&
                        std::abs(first.confidence - 1.0f) <= eps && std::abs(half.confidence - 0.75f) <= eps &&
                        (avg.color.array() - 0.5f).abs().maxCoeff() <= eps && std::abs(avg.confidence - 1.0f) <= eps;
  return {violations == 0 && examples,
          fmt("%d/1000 tuples violate closure/monotonicity/convexity; worked examples %s", violations,
              examples ? "exact" : "MISMATCH")};
}

Outcome sphere_confidence() {
  const TriangleMesh sphere = primitives::uv_sphere(96, 48);
  CameraView v;
  v.width = v.height = 64;
  const GBuffer g = rasterize(sphere, v);
  const ConfidenceImage c = view_confidence(g, v, 1.0);
  const Vec3 eye = v.eye();

  // Analytic angle between the true sphere normal and the view ray.
  const auto theta = [&](int x, int y) {
    const Vec3 d = v.ray_direction(x + 0.5, y + 0.5);
    const double b = eye.dot(d);
    const double disc = b * b - (eye.squaredNorm() - 1.0);
    if (disc < 0) return -1.0;
    const Vec3 p = eye + (-b - std::sqrt(disc)) * d;
    return std::acos(std::clamp(p.dot((eye - p).normalized()), -1.0, 1.0)) * 180.0 / M_PI;
  };

  double best0 = 1e9, c0 = 0, worst60 = 0;
  int n60 = 0;
  std::vector<std::pair<double, float>> samples;
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 64; ++x) {
      if (!g.covered(x, y)) continue;
      const double t = theta(x, y);
      if (t < 0) continue;
      samples.emplace_back(t, c(y, x));
      if (t < best0) {
        best0 = t;
        c0 = c(y, x);
      }
      if (std::abs(t - 60.0) <= 0.5) {
        worst60 = std::max(worst60, std::abs(c(y, x) - 0.5));
        ++n60;
      }
    }
  }
  // Monotone along the angle: sort by analytic angle and allow only the
  // faceting noise of the tessellated sphere between neighbors.
  std::sort(samples.begin(), samples.end());
  double worst_rise = 0;
  for (std::size_t i = 1; i < samples.size(); ++i)
    worst_rise = std::max(worst_rise, double(samples[i].second) - samples[i - 1].second);
  // Sampled every 10 degrees by pixel-bucket means, strictly decreasing.
  std::vector<double> bucket(9, 0.0);
  std::vector<int> count(9, 0);
  for (const auto& [t, cf] : samples) {
    const int k = static_cast<int>(t / 10.0);
    if (k < 9) {
      bucket[k] += cf;
      ++count[k];
    }
  }
  bool buckets_decrease = true;
  for (int k = 1; k < 9; ++k)
    if (count[k] && count[k - 1]) buckets_decrease = buckets_decrease && bucket[k] / count[k] < bucket[k - 1] / count[k - 1];
  const bool pass = std::abs(c0 - 1.0) <= 1e-3 && n60 > 0 && worst60 <= 0.02 && buckets_decrease && worst_rise <= 0.01;
  return {pass, fmt("theta=%.2fdeg -> %.5f; %d px at 60+-0.5deg, max |c-0.5| %.4f; 10deg bucket means %s; max "
                    "neighbor rise %.4f",
                    best0, c0, n60, worst60, buckets_decrease ? "decreasing" : "NOT decreasing", worst_rise)};
}

Outcome bake_round_trip() {
  constexpr int kAtlas = 512;
  constexpr int kCell = 64;
  const TriangleMesh sphere = primitives::uv_sphere(96, 48);
  TextureAtlas src(kAtlas);
  src.confidence.setConstant(1.0f);
  for (int y = 0; y < kAtlas; ++y)
    for (int x = 0; x < kAtlas; ++x) {
      const bool on = ((x / kCell) + (y / kCell)) % 2 == 0;
      src.color.set(x, y, on ? Vec3f(0.9f, 0.8f, 0.1f) : Vec3f(0.1f, 0.2f, 0.7f));
    }
  CameraView v;
  v.width = v.height = 1024;
  const GBuffer g = rasterize(sphere, v);
  const UvRaster uv = rasterize_uv(sphere, kAtlas);
  // Nearest filtering makes every rendered pixel an exact atlas sample, so
  // the comparison isolates the bake. The bilinear render is reported too.
  const auto share_within = [&](TextureFilter filter, long& considered) {
    const ViewImage img = render_color(g, sphere, src, 0.1f, kNeutralGray, filter);
    const LocalBake bake = bake_view(sphere, v, g, img, uv);
    long within = 0;
    considered = 0;
    for (const auto& t : bake.texels) {
      if (!(t.confidence > 0.5f)) continue;
      ++considered;
      within += (t.color - src.color.at(t.x, t.y)).cwiseAbs().maxCoeff() <= 0.02f;
    }
    return considered ? double(within) / considered : 0.0;
  };
  long considered = 0, considered_bilinear = 0;
  const double share = share_within(TextureFilter::Nearest, considered);
  const double bilinear = share_within(TextureFilter::Bilinear, considered_bilinear);
  return {considered > 1000 && share >= 0.99,
          fmt("%ld texels with C_k > 0.5, %.2f%% within 0.02 (nearest-filtered render; bilinear render %.2f%%), "
              "checker cell %d texels, 1024^2 view",
              considered, 100.0 * share, 100.0 * bilinear, kCell)};
}

Outcome visibility_oracle() {
  std::mt19937 rng(77);
  std::vector<std::pair<std::string, TriangleMesh>> meshes;
  meshes.emplace_back("cube", primitives::cube(0.6));
  meshes.emplace_back("parallel quads", primitives::merge(primitives::quad(0, 0, -0.3, 0.6, 0.0, 0.0, 0.5, 1.0),
                                                          primitives::quad(0.1, 0.0, 0.3, 0.3, 0.5, 0.0, 1.0, 1.0)));
  meshes.emplace_back("low-poly sphere", primitives::uv_sphere(8, 4));
  meshes.emplace_back("soup 30", oracle::random_soup(rng, 30));
  meshes.emplace_back("soup 50", oracle::random_soup(rng, 50));

  std::string detail;
  bool pass = true;
  for (const auto& [name, m] : meshes) {
    if (m.triangles.size() > 50) return {false, name + " exceeds 50 triangles"};
    CameraView v;
    v.azimuth = 25;
    v.elevation = 15;
    v.width = v.height = 256;
    const UvRaster uv = rasterize_uv(m, 64);
    const GBuffer g = rasterize(m, v);
    const LocalBake bake = bake_view(m, v, g, ViewImage(256, 256, 0.5f), uv);
    Plane<float> baked = Plane<float>::Zero(64, 64);
    for (const auto& t : bake.texels) baked(t.y, t.x) = t.confidence;

    long relevant = 0, agree = 0;
    for (int y = 0; y < 64; ++y)
      for (int x = 0; x < 64; ++x) {
        if (uv.triangle(y, x) < 0) continue;
        const Vec3 p = surface_point(m, uv, x, y);
        const Vec3 n = surface_normal(m, uv, x, y);
        const double ck = confidence(n, (v.eye() - p).normalized(), 1.0);
        const auto proj = v.project(p);
        const bool in_frame = proj.x >= 0 && proj.y >= 0 && proj.x < v.width && proj.y < v.height;
        const bool truth = ck > 0.1 && in_frame && oracle::visible(m, v, p, 1e-3);
        const bool got = baked(y, x) > 0.1f;
        if (!truth && !got) continue;
        ++relevant;
        agree += truth == got;
      }
    const double share = relevant ? double(agree) / relevant : 1.0;
    pass = pass && relevant > 0 && share >= 0.98;
    detail += fmt("%s%s %.1f%% of %ld", detail.empty() ? "" : "; ", name.c_str(), 100.0 * share, relevant);
  }
  return {pass, detail};
}

Outcome morphology() {
  PipelineConfig config;
  const double r1024 = config.effective_dilation_radius();
  const bool rule = r1024 == 24.0 && scaled_dilation_radius(512) == 12.0 && scaled_dilation_radius(2048) == 48.0 &&
                    r1024 >= 16.0 && r1024 <= 32.0;
  MaskImage edge = MaskImage::Zero(4, 1024);
  edge.rightCols(512).setConstant(1.0f);
  const MaskImage grown = dilate(edge, r1024);
  const bool advanced = grown(2, 512 - 24) == 1.0f && grown(2, 512 - 25) == 0.0f;

  MaskImage half = MaskImage::Zero(96, 128);
  half.rightCols(64).setConstant(1.0f);
  const MaskImage s = soft_mask(half, 8.0);
  const MaskImage ref = oracle::dense_gaussian(half, 8.0);
  // The original boundary runs between columns 63 and 64.
  const double at_boundary = 0.5 * (s(48, 63) + s(48, 64));
  const double oracle_boundary = 0.5 * (ref(48, 63) + ref(48, 64));
  const double max_dev = (s - ref).abs().maxCoeff();
  const bool pass = rule && advanced && std::abs(at_boundary - 0.5) <= 0.02 && std::abs(oracle_boundary - 0.5) <= 0.02 &&
                    max_dev <= 1e-5;
  return {pass, fmt("radius(1024)=%.0f in [16,32], boundary advanced 24 px: %s; sigma=8 boundary %.4f (oracle %.4f, "
                    "max deviation %.1e)",
                    r1024, advanced ? "yes" : "no", at_boundary, oracle_boundary, max_dev)};
}

PipelineConfig desk_config() {
  PipelineConfig c;
  c.apply_desk_scale();
  c.seed = 7;
  return c;
}

const PromptSpec kPrompt{"a hand-painted ceramic ornament", "blurry, low quality", {}};

Outcome seam_reduction() {
  MockGenerator gen;
  const TriangleMesh sphere = primitives::uv_sphere(48, 24);
  PipelineConfig soft = desk_config();
  PipelineConfig binary = desk_config();
  binary.soft_inpainting = false;
  const RunResult a = run(sphere, kPrompt, soft, gen);
  const RunResult b = run(sphere, kPrompt, binary, gen);
  const double es = a.report.final_seam_energy;
  const double eb = b.report.final_seam_energy;
  const bool same_boundary = (a.seam_boundary == b.seam_boundary).all();
  const long texels = a.seam_boundary.count();
  return {texels > 0 && same_boundary && es < eb,
          fmt("seam energy soft %.5f vs binary %.5f (%.1f%% lower) over %ld boundary texels", es, eb,
              eb > 0 ? 100.0 * (eb - es) / eb : 0.0, texels)};
}

Outcome determinism_coverage() {
  MockGenerator gen;
  std::string detail;
  bool pass = true;
  for (const auto& [name, mesh] : {std::pair<std::string, TriangleMesh>{"sphere", primitives::uv_sphere(48, 24)},
                                   std::pair<std::string, TriangleMesh>{"cube", primitives::cube()}}) {
    Plane<float> prev;
    bool monotone = true;
    RunHooks hooks;
    hooks.after_blend = [&](int, const TextureAtlas& a) {
      if (prev.size() > 0) monotone = monotone && (a.confidence >= prev).all();
      prev = a.confidence;
    };
    const RunResult first = run(mesh, kPrompt, desk_config(), gen, hooks);
    const RunResult second = run(mesh, kPrompt, desk_config(), gen);
    const bool identical = first.final_texture.color == second.final_texture.color &&
                           (first.final_texture.confidence == second.final_texture.confidence).all();
    const double cov = first.report.final_coverage;
    pass = pass && monotone && identical && cov == 1.0;
    detail += fmt("%s%s coverage %.2f%%, C* monotone %s, rerun %s", detail.empty() ? "" : "; ", name.c_str(),
                  100.0 * cov, monotone ? "yes" : "NO", identical ? "bit-identical" : "DIFFERS");
  }
  return {pass, detail};
}

Outcome wire_protocol() {
  using rocotex::testing::StubMode;
  using rocotex::testing::StubServer;
  const GenerationRequest req = rocotex::testing::make_request(64, 32, 5);

  StubServer echo(StubMode::Echo);
  HttpOptions opts;
  opts.endpoint = echo.url();
  opts.timeout = std::chrono::milliseconds(2000);
  HttpGenerator gen(opts);
  const auto out = gen.generate(req);
  float worst = 0;
  for (int c = 0; c < 3; ++c)
    for (int y = 0; y < req.height(); ++y)
      for (int x = 0; x < req.width(); ++x)
        if (req.soft_mask(y, x) == 0.0f) worst = std::max(worst, std::abs(out.image[c](y, x) - req.image[c](y, x)));
  const bool preserved = worst <= 1.0f / 255.0f;

  StubServer wrong(StubMode::WrongSize);
  opts.endpoint = wrong.url();
  bool enforced = false;
  try {
    HttpGenerator(opts).generate(req);
  } catch (const ProtocolError&) {
    enforced = true;
  }

  StubServer flaky(StubMode::Echo, 2, std::chrono::milliseconds(600));
  std::vector<long long> sleeps;
  opts.endpoint = flaky.url();
  opts.timeout = std::chrono::milliseconds(200);
  opts.retries = 3;
  opts.sleep = [&](std::chrono::milliseconds d) { sleeps.push_back(d.count()); };
  HttpGenerator retrying(opts);
  bool recovered = false;
  try {
    recovered = retrying.generate(req).image.width() == req.width();
  } catch (const std::exception&) {
  }
  const bool schedule = recovered && retrying.last_attempts() == 3 && sleeps == std::vector<long long>{1000, 2000};
  return {preserved && enforced && schedule,
          fmt("echo max deviation on preserved pixels %.5f (<= 1/255: %s); wrong size -> ProtocolError: %s; "
              "fail-twice: %d attempts, backoff %lld/%lld ms",
              worst, preserved ? "yes" : "no", enforced ? "yes" : "no", retrying.last_attempts(),
              sleeps.size() > 0 ? sleeps[0] : -1LL, sleeps.size() > 1 ? sleeps[1] : -1LL)};
}

Outcome regional_prompt() {
  const PromptSpec spec{"a bronze statue of a lion", "", {}};
  const RegionalPrompt p = compose_regional(spec, view_schedule({})[0], 2048, 1024);
  const bool phrases = direction_phrase(view_schedule({})[0].view_i) == "front view, (from front, front view focus)" &&
                       direction_phrase(view_schedule({})[0].view_j) == "back view, (from back, back view focus)" &&
                       p.regions.size() == 2 &&
                       p.regions[0].text == "a bronze statue of a lion, front view, (from front, front view focus)" &&
                       p.regions[1].text == "a bronze statue of a lion, back view, (from back, back view focus)";
  const bool rects = p.regions.size() == 2 && p.regions[0].rect == PixelRect{0, 0, 1024, 1024} &&
                     p.regions[1].rect == PixelRect{1024, 0, 1024, 1024};
  return {phrases && rects, fmt("phrases verbatim: %s; rectangles [0,1024)x[0,1024) and [1024,2048)x[0,1024): %s",
                                phrases ? "yes" : "no", rects ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "blend closure, monotonicity, convexity", 1.0, blend_suite},
      {2, "confidence law on a 64x64 sphere", 1.0, sphere_confidence},
      {3, "checkerboard bake round-trip at 512^2", 5.0, bake_round_trip},
      {4, "bake visibility vs ray casting", 10.0, visibility_oracle},
      {5, "dilation scaling and soft-mask boundary", 2.0, morphology},
      {6, "soft vs binary seam energy", 30.0, seam_reduction},
      {7, "determinism, coverage, monotone C*", 60.0, determinism_coverage},
      {8, "HTTP wire protocol", 5.0, wire_protocol},
      {9, "regional prompt fidelity", 1.0, regional_prompt},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s criterion %d: %s | %s | %.2f s (budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", EXCEEDED");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
