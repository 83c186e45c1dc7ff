#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rocotex/geometry/primitives.hpp"
#include "rocotex/mask/confidence.hpp"
#include "rocotex/mask/morphology.hpp"

using namespace rocotex;

namespace {

MaskImage random_mask(std::mt19937& rng, int w, int h, double density) {
  std::bernoulli_distribution on(density);
  MaskImage m(h, w);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) m(y, x) = on(rng) ? 1.0f : 0.0f;
  return m;
}

}  // namespace

TEST_CASE("confidence law") {
  CHECK(confidence_from_cos(1.0, 1.0) == 1.0);
  CHECK(confidence_from_cos(0.5, 1.0) == doctest::Approx(0.5));
  CHECK(confidence_from_cos(0.5, 2.0) == doctest::Approx(0.25));
  CHECK(confidence_from_cos(-0.3, 1.0) == 0.0);
  CHECK(confidence_from_cos(0.0, 1.0) == 0.0);
  CHECK(confidence_from_cos(0.5, 1.0, ConfidenceLaw::Linear) == doctest::Approx(1.0 / 3.0));
  CHECK(confidence(Vec3::UnitZ(), Vec3::UnitZ(), 1.0) == 1.0);
  CHECK(confidence(Vec3::UnitZ(), -Vec3::UnitZ(), 1.0) == 0.0);

  SUBCASE("monotone in the angle") {
    for (auto law : {ConfidenceLaw::Cosine, ConfidenceLaw::Linear}) {
      double prev = 2.0;
      for (int deg = 0; deg <= 90; ++deg) {
        const double c = confidence_from_cos(std::cos(deg * M_PI / 180), 1.5, law);
        CHECK(c <= prev);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
        prev = c;
      }
    }
  }
}

TEST_CASE("view confidence of a quad seen head-on is 1 inside, 0 outside") {
  const TriangleMesh q = primitives::quad(0, 0, 0, 0.5);
  CameraView v;
  v.width = v.height = 32;
  const GBuffer g = rasterize(q, v);
  const ConfidenceImage c = view_confidence(g, v);
  CHECK(c(16, 16) > 0.99f);
  CHECK(c(0, 0) == 0.0f);
  CHECK(c.maxCoeff() <= 1.0f);
}

TEST_CASE("untextured mask follows C* and ignores background") {
  const TriangleMesh q = primitives::quad(0, 0, 0, 0.5);
  CameraView v;
  v.width = v.height = 32;
  const GBuffer g = rasterize(q, v);
  TextureAtlas atlas(16);
  const MaskImage all = untextured_mask(atlas, g, q, 0.1f);
  CHECK(all.sum() == doctest::Approx(double(g.coverage().count())));
  atlas.confidence.setConstant(0.5f);
  CHECK(untextured_mask(atlas, g, q, 0.1f).sum() == 0.0f);
}

TEST_CASE("distance transform matches brute force") {
  std::mt19937 rng(3);
  const MaskImage m = random_mask(rng, 23, 17, 0.05);
  const Plane<double> d2 = squared_distance_transform(m > 0.5f);
  for (int y = 0; y < 17; ++y) {
    for (int x = 0; x < 23; ++x) {
      double best = std::numeric_limits<double>::infinity();
      for (int yy = 0; yy < 17; ++yy)
        for (int xx = 0; xx < 23; ++xx)
          if (m(yy, xx) > 0.5f) best = std::min(best, double((x - xx) * (x - xx) + (y - yy) * (y - yy)));
      CHECK(d2(y, x) == best);
    }
  }
  CHECK(std::isinf(squared_distance_transform(Plane<bool>::Constant(4, 4, false))(2, 2)));
}

TEST_CASE("dilation") {
  SUBCASE("single pixel grows into a Euclidean disk") {
    MaskImage m = MaskImage::Zero(21, 21);
    m(10, 10) = 1;
    const MaskImage d = dilate(m, 3.0);
    // Lattice points with dx^2 + dy^2 <= 9: 29.
    CHECK(d.sum() == 29.0f);
    CHECK(d(10, 13) == 1.0f);
    CHECK(d(12, 12) == 1.0f);  // 8 <= 9
    CHECK(d(13, 11) == 0.0f);  // 10 > 9
  }
  SUBCASE("matches brute force") {
    std::mt19937 rng(5);
    const MaskImage m = random_mask(rng, 30, 24, 0.03);
    for (double r : {0.0, 1.0, 2.5, 4.0, 7.3}) CHECK((dilate(m, r) == oracle::dense_dilate(m, r)).all());
  }
  SUBCASE("radius 0 is identity, empty stays empty") {
    std::mt19937 rng(9);
    const MaskImage m = random_mask(rng, 16, 16, 0.3);
    CHECK((dilate(m, 0.0) == m).all());
    CHECK(dilate(MaskImage::Zero(8, 8), 5.0).sum() == 0.0f);
  }
  SUBCASE("monotone and extensive") {
    std::mt19937 rng(13);
    const MaskImage m = random_mask(rng, 40, 40, 0.02);
    const MaskImage a = dilate(m, 2.0);
    const MaskImage b = dilate(m, 5.0);
    CHECK((a >= m).all());
    CHECK((b >= a).all());
  }
  SUBCASE("composition") {
    // Exact Euclidean disks on the lattice are not closed under Minkowski
    // sums, so dilating twice can be strictly smaller than dilating once by
    // the summed radius. It is always contained in it.
    MaskImage point = MaskImage::Zero(15, 15);
    point(7, 7) = 1;
    const MaskImage twice = dilate(dilate(point, 2.0), 2.0);
    const MaskImage once = dilate(point, 4.0);
    CHECK((twice <= once).all());
    CHECK(twice.sum() < once.sum());

    std::mt19937 rng(17);
    const MaskImage dense = random_mask(rng, 48, 48, 0.3);
    CHECK((dilate(dilate(dense, 2.0), 3.0) == dilate(dense, 5.0)).all());
  }
  SUBCASE("scaled radius") {
    CHECK(scaled_dilation_radius(1024) == 24.0);
    CHECK(scaled_dilation_radius(512) == 12.0);
    CHECK(scaled_dilation_radius(2048) == 48.0);
  }
  CHECK_THROWS_AS(dilate(MaskImage::Zero(4, 4), -1.0), Error);
}

TEST_CASE("soft mask") {
  SUBCASE("matches the dense disk-truncated Gaussian") {
    std::mt19937 rng(21);
    const MaskImage m = dilate(random_mask(rng, 40, 32, 0.01), 3.0);
    for (double sigma : {0.7, 2.0, 3.3}) {
      const MaskImage s = soft_mask(m, sigma);
      const MaskImage ref = oracle::dense_gaussian(m, sigma);
      CHECK((s - ref).abs().maxCoeff() <= 1e-6f);
    }
  }
  SUBCASE("exact 0 and 1 farther than 3 sigma from the boundary") {
    MaskImage m = MaskImage::Zero(64, 64);
    m.rightCols(32).setConstant(1.0f);
    const double sigma = 4.0;
    const MaskImage s = soft_mask(m, sigma);
    for (int x = 0; x < 64; ++x) {
      const double to_edge = x < 32 ? 32 - x : x - 31;
      if (to_edge > 3 * sigma) CHECK(s(10, x) == (x < 32 ? 0.0f : 1.0f));
    }
    CHECK(s(10, 31) > 0.0f);
    CHECK(s(10, 31) < 0.5f);
    CHECK(s(10, 32) > 0.5f);
    CHECK(s(10, 32) < 1.0f);
  }
  SUBCASE("values stay in [0, 1] and support stays near the mask") {
    std::mt19937 rng(23);
    const MaskImage m = dilate(random_mask(rng, 50, 50, 0.01), 2.0);
    const MaskImage s = soft_mask(m, 2.0);
    CHECK(s.minCoeff() >= 0.0f);
    CHECK(s.maxCoeff() <= 1.0f);
    const MaskImage reach = dilate(m, 6.0);
    CHECK(((s > 0.0f) <= (reach > 0.5f)).all());
  }
  SUBCASE("constant masks are unchanged") {
    CHECK((soft_mask(MaskImage::Zero(9, 9), 2.0) == 0.0f).all());
    CHECK((soft_mask(MaskImage::Ones(9, 9), 2.0) == 1.0f).all());
  }
  CHECK_THROWS_AS(soft_mask(MaskImage::Zero(4, 4), 0.0), Error);
}

TEST_CASE("confidence is non-increasing in alpha") {
  for (int deg = 0; deg < 90; deg += 7) {
    const double cos_angle = std::cos(deg * M_PI / 180);
    double prev = 2.0;
    for (double alpha : {0.5, 1.0, 1.5, 2.0, 4.0}) {
      const double c = confidence_from_cos(cos_angle, alpha);
      CHECK(c <= prev + 1e-15);
      prev = c;
    }
  }
  CHECK(confidence_from_cos(std::cos(M_PI / 3), 1.0) == doctest::Approx(0.5));
  CHECK(confidence(Vec3::UnitZ(), Vec3::UnitX(), 1.0) == doctest::Approx(0.0));
}

TEST_CASE("back view of a front-textured sphere is fully untextured") {
  const TriangleMesh sphere = primitives::uv_sphere(32, 16);
  CameraView front;
  front.width = front.height = 64;
  CameraView back = front;
  back.azimuth = 180;
  // C* = 1 exactly on texels a brute-force ray cast sees from the front.
  const int res = 64;
  TextureAtlas atlas(res);
  for (int y = 0; y < res; ++y) {
    for (int x = 0; x < res; ++x) {
      const Vec2 uv = texel_to_uv(x, y, res);
      const double phi = 2 * M_PI * (uv.x() - 0.02) / 0.96;
      const double theta = M_PI * (1.0 - (uv.y() - 0.02) / 0.96);
      const Vec3 p(std::sin(theta) * std::sin(phi), std::cos(theta), std::sin(theta) * std::cos(phi));
      if (p.dot(front.eye() - p) > 0 && oracle::visible(sphere, front, p, 1e-2)) atlas.confidence(y, x) = 1.0f;
    }
  }
  const GBuffer g = rasterize(sphere, back);
  const MaskImage m = untextured_mask(atlas, g, sphere, 0.1f);
  CHECK(m.sum() == doctest::Approx(double(g.coverage().count())));
}

TEST_CASE("untextured mask with C* = 0 is the coverage mask") {
  const TriangleMesh cube = primitives::cube(0.5);
  CameraView v;
  v.azimuth = 30;
  v.elevation = 20;
  v.width = v.height = 48;
  const GBuffer g = rasterize(cube, v);
  const MaskImage m = untextured_mask(TextureAtlas(32), g, cube);
  CHECK((m == g.coverage().cast<float>()).all());
}

TEST_CASE("default dilation advances a 1024-wide boundary by 24 px") {
  MaskImage m = MaskImage::Zero(8, 1024);
  m.rightCols(512).setConstant(1.0f);
  const MaskImage d = dilate(m, scaled_dilation_radius(1024));
  for (int x = 0; x < 1024; ++x) CHECK(d(4, x) == (x >= 512 - 24 ? 1.0f : 0.0f));
}

TEST_CASE("dilation composes on random 64x64 masks") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const MaskImage m = random_mask(rng, 64, 64, 0.25);
    const MaskImage once = dilate(m, 4.0);
    const MaskImage twice = dilate(dilate(m, 1.5), 2.5);
    CHECK((twice <= once).all());
    CHECK((twice == once).all());
  }
}

TEST_CASE("half-plane soft mask is one half at the boundary") {
  MaskImage m = MaskImage::Zero(64, 128);
  m.rightCols(64).setConstant(1.0f);
  const MaskImage s = soft_mask(m, 8.0);
  const MaskImage ref = oracle::dense_gaussian(m, 8.0);
  // The boundary lies between columns 63 and 64.
  const double boundary = 0.5 * (s(32, 63) + s(32, 64));
  CHECK(std::abs(boundary - 0.5) <= 0.02);
  CHECK(std::abs(0.5 * (ref(32, 63) + ref(32, 64)) - boundary) <= 1e-6);
  CHECK(s(32, 127) >= 1.0f - 1e-3f);
}
