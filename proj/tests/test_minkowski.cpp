#include <doctest.h>

#include "helpers.hpp"
#include "lcs/minkowski.hpp"

using namespace lcs;
using lcs::testing::Rng;

TEST_CASE("scalar product") {
  CHECK(mdot(Vec3(1, 0, 1), Vec3(1, 0, 1)) == 0.0);
  CHECK(mdot(Vec3(1, 0, 1), Vec3(-1, 0, 1)) == -2.0);
  CHECK(mdot(Vec3(0, 0, 1), Vec3(0, 0, 1)) == -1.0);
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Vec3 x(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    const Vec3 y(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    CHECK(mdot(x, y) == doctest::Approx(mdot(y, x)).epsilon(1e-15));
    CHECK(mdot(x + y, x) == doctest::Approx(mdot(x, x) + mdot(y, x)).epsilon(1e-12));
  }
}

TEST_CASE("light point validation") {
  CHECK_NOTHROW(LightPoint(Vec3(1, 0, 1)));
  CHECK_THROWS_AS(LightPoint(Vec3(1, 0, -1)), Error);
  CHECK_THROWS_AS(LightPoint(Vec3(1, 0.5, 1)), Error);
}

TEST_CASE("lambda lengths") {
  const LightPoint x(Vec3(1, 0, 1)), y(Vec3(-1, 0, 1));
  CHECK(lambda_of(x, y) == doctest::Approx(1.0).epsilon(1e-15));
  const LightPoint a(Vec3(0.5, 0, 0.5)), b(Vec3(-0.5, 0, 0.5));
  CHECK(lambda_of(a, b) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(lambda_of(x, x), Error);
  CHECK_THROWS_AS(lambda_of(x, LightPoint(Vec3(2, 0, 2))), Error);
}

TEST_CASE("segment lengths dictionary") {
  const auto [x, y] = standard_pair(2.0 * 0.5 * 0.5);
  const SegmentLengths sl = segment_lengths(x, y);
  CHECK(sl.hyperbolic == doctest::Approx(0.9624236501192069).epsilon(1e-12));
  CHECK(sl.euclidean == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(sl.spherical.has_value());
  CHECK(*sl.spherical == doctest::Approx(M_PI / 3.0).epsilon(1e-12));

  const auto [u, v] = standard_pair(2.0);
  const SegmentLengths boundary = segment_lengths(u, v);
  CHECK(boundary.hyperbolic == doctest::Approx(1.762747174039086).epsilon(1e-12));
  CHECK(boundary.euclidean == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_FALSE(boundary.spherical.has_value());
  CHECK_THROWS_AS(segment_length(u, v, Geometry::spherical), Error);

  // Small-length limit: ratios tend to one.
  const auto [p, q] = standard_pair(2.0 * 1e-6 * 1e-6);
  const SegmentLengths tiny = segment_lengths(p, q);
  CHECK(tiny.hyperbolic / tiny.euclidean == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(*tiny.spherical / tiny.euclidean == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("trig chain on random pairs") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Mat3 g = lcs::testing::random_motion(rng);
    const double lam = rng.uniform(0.05, 0.95);
    const auto [x0, y0] = standard_pair(2.0 * lam * lam);
    const LightPoint x(g * x0.v), y(g * y0.v);
    const double l = lambda_of(x, y);
    CHECK(l == doctest::Approx(lam).epsilon(1e-12));
    const SegmentLengths sl = segment_lengths(x, y);
    CHECK(std::sinh(sl.hyperbolic / 2) == doctest::Approx(l).epsilon(1e-12));
    CHECK(sl.euclidean / 2 == doctest::Approx(l).epsilon(1e-12));
    CHECK(std::sin(*sl.spherical / 2) == doctest::Approx(l).epsilon(1e-12));
  }
}

TEST_CASE("standard pair and normalization") {
  const auto [x, y] = standard_pair(2.0);
  CHECK((x.v - Vec3(1, 0, 1)).norm() == 0.0);
  CHECK((y.v - Vec3(-1, 0, 1)).norm() == 0.0);
  CHECK((normalize_pair(x, y) - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-14);

  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const Mat3 g = lcs::testing::random_motion(rng);
    const double t = std::exp(rng.uniform(-2, 2));
    const auto [p0, q0] = standard_pair(t);
    const LightPoint p(g * p0.v), q(g * q0.v);
    const Mat3 a = normalize_pair(p, q);
    CHECK(is_so21(a, 1e-10));
    const double h = std::sqrt(t / 2.0);
    CHECK((a * p.v - Vec3(h, 0, h)).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, h));
    CHECK((a * q.v - Vec3(-h, 0, h)).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, h));
    // mdot preserved
    const Vec3 u(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Vec3 w(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    CHECK(mdot(a * u, a * w) == doctest::Approx(mdot(u, w)).epsilon(1e-12));
  }
}

TEST_CASE("triangle lift") {
  const auto t = lift_triangle(1, 1, 1);
  CHECK((t[0].v - Vec3(1, 0, 1)).norm() == 0.0);
  CHECK((t[1].v - Vec3(-1, 0, 1)).norm() == 0.0);
  CHECK((t[2].v - Vec3(0, 2, 2)).norm() == 0.0);

  const double r = 1.0 / std::sqrt(2.0);
  const auto s = lift_triangle(r, r, r);
  CHECK((s[2].v - Vec3(0, std::sqrt(2.0), std::sqrt(2.0))).cwiseAbs().maxCoeff() < 1e-15);

  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const double l12 = std::exp(rng.uniform(-1, 1));
    const double l13 = std::exp(rng.uniform(-1, 1));
    const double l23 = std::exp(rng.uniform(-1, 1));
    const auto lift = lift_triangle(l12, l13, l23);
    CHECK(lambda_of(lift[0], lift[1]) == doctest::Approx(l12).epsilon(1e-12));
    CHECK(lambda_of(lift[0], lift[2]) == doctest::Approx(l13).epsilon(1e-12));
    CHECK(lambda_of(lift[1], lift[2]) == doctest::Approx(l23).epsilon(1e-12));
    CHECK(lift[2].x2() > 0.0);
  }
}

TEST_CASE("complete quad places the opposite side") {
  Rng rng(19);
  for (int i = 0; i < 200; ++i) {
    const auto lift = lift_triangle(std::exp(rng.uniform(-1, 1)), std::exp(rng.uniform(-1, 1)),
                                    std::exp(rng.uniform(-1, 1)));
    const Mat3 g = lcs::testing::random_motion(rng);
    const LightPoint x(g * lift[0].v), z(g * lift[1].v), y(g * lift[2].v);
    const double lxw = std::exp(rng.uniform(-1, 1)), lzw = std::exp(rng.uniform(-1, 1));
    const LightPoint w = complete_quad(x, z, y, lxw, lzw);
    CHECK(lambda_of(x, w) == doctest::Approx(lxw).epsilon(1e-11));
    CHECK(lambda_of(z, w) == doctest::Approx(lzw).epsilon(1e-11));
    // Opposite side: in normalized coordinates y and w have opposite x2 signs.
    const Mat3 a = normalize_pair(x, z);
    CHECK((a * y.v)[1] * (a * w.v)[1] < 0.0);
  }
}

TEST_CASE("plane center") {
  const auto p = plane_center(LightPoint(Vec3(1, 0, 1)), LightPoint(Vec3(0, 1, 1)),
                              LightPoint(Vec3(-1, 0, 1)));
  REQUIRE(p.has_value());
  CHECK((p->w - Vec3(0, 0, 1)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(p->rho_hat == doctest::Approx(1.0).epsilon(1e-14));

  const auto lift = lift_triangle(1, 1, 1);
  const auto q = plane_center(lift[0], lift[1], lift[2]);
  REQUIRE(q.has_value());
  CHECK((q->support() - Vec3(0, 0.5, 1)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((q->w - Vec3(0, 2.0 / 3.0, 4.0 / 3.0)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(q->rho_hat == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-14));

  // Degenerate: two points on one ray span a plane through the origin.
  const auto degenerate = plane_center(LightPoint(Vec3(1, 0, 1)), LightPoint(Vec3(2, 0, 2)),
                                       LightPoint(Vec3(0, 1, 1)));
  CHECK_FALSE(degenerate.has_value());
}

TEST_CASE("delaunay lift test") {
  const LightPoint x(Vec3(1, 0, 1)), y(Vec3(0, 1, 1)), z(Vec3(-1, 0, 1));
  CHECK(delaunay_lift_test(x, y, z, LightPoint(Vec3(0, -1, 1))) == EdgeStatus::Flat);
  CHECK(delaunay_lift_test(x, y, z, LightPoint(Vec3(0, -2, 2))) == EdgeStatus::Strict);
  CHECK(delaunay_lift_test(x, y, z, LightPoint(Vec3(0, -0.5, 0.5))) == EdgeStatus::Violated);

  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const Mat3 g = lcs::testing::random_motion(rng);
    const auto status = delaunay_lift_test(LightPoint(g * x.v), LightPoint(g * y.v),
                                           LightPoint(g * z.v), LightPoint(g * Vec3(0, -2, 2)));
    CHECK(status == EdgeStatus::Strict);
    const auto flat = delaunay_lift_test(LightPoint(g * x.v), LightPoint(g * y.v),
                                         LightPoint(g * z.v), LightPoint(g * Vec3(0, -1, 1)));
    CHECK(flat == EdgeStatus::Flat);
  }
}

TEST_CASE("ambient metric") {
  for (const Geometry K : {Geometry::hyperbolic, Geometry::euclidean, Geometry::spherical}) {
    const Mat3 g = ambient_metric(Vec3::Zero(), K);
    CHECK((g - minkowski_form()).cwiseAbs().maxCoeff() < 1e-15);
  }
  // de Sitter chart blows up like (1+x.x)^-2 toward the hyperboloid.
  const double t = std::sqrt(1.0 - 1e-6);
  CHECK(ambient_metric(Vec3(0, 0, t), Geometry::spherical).cwiseAbs().maxCoeff() > 1e11);
  CHECK_THROWS_AS(ambient_metric(Vec3(0, 0, 2), Geometry::spherical), Error);
  CHECK_THROWS_AS(ambient_metric(Vec3(2, 0, 0), Geometry::hyperbolic), Error);

  Rng rng(29);
  for (int i = 0; i < 50; ++i) {
    const Vec3 x(rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4));
    const Mat3 g = ambient_metric(x, Geometry::hyperbolic);
    CHECK((g - g.transpose()).cwiseAbs().maxCoeff() < 1e-14);
    const Mat3 s = ambient_metric(x, Geometry::spherical);
    CHECK((s - s.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("numeric segment length oracle") {
  const auto [x, y] = standard_pair(0.5);  // lambda = 0.5
  CHECK(numeric_segment_length(x, y, Geometry::euclidean, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(numeric_segment_length(x, y, Geometry::spherical, 10000) ==
        doctest::Approx(M_PI / 3.0).epsilon(1e-6));
  CHECK(numeric_segment_length(x, y, Geometry::hyperbolic, 10000) ==
        doctest::Approx(0.9624236501192069).epsilon(1e-6));
  const auto [u, v] = standard_pair(2.0);  // lambda = 1: segment leaves F*
  CHECK_THROWS_AS(numeric_segment_length(u, v, Geometry::spherical, 10), Error);
}

TEST_CASE("cone section arc length") {
  CHECK(cone_section_arc_length(1.0, 0.0) == doctest::Approx(M_PI).epsilon(1e-15));
  CHECK(cone_section_arc_length(1.0, 0.5) == doctest::Approx(4.8367983046245815).epsilon(1e-12));
  double prev = 0.0;
  for (int i = 0; i < 19; ++i) {
    const double k = -0.9 + 0.1 * i;
    const double len = cone_section_arc_length(1.0, k);
    CHECK(len > prev);
    prev = len;
  }
  CHECK_THROWS_AS(cone_section_arc_length(1.0, 1.0), Error);
}

TEST_CASE("chart involution") {
  CHECK((chart_involution(Vec3(0, 0, 1)) - Vec3(0, 0, 1)).norm() == 0.0);
  CHECK((chart_involution(Vec3(1, 0, 2)) - Vec3(0.5, 0, 0.5)).norm() == 0.0);
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const Vec3 x(rng.uniform(-2, 2), rng.uniform(-2, 2), std::exp(rng.uniform(-1, 1)));
    CHECK((chart_involution(chart_involution(x)) - x).cwiseAbs().maxCoeff() < 1e-14);
  }
  CHECK_THROWS_AS(chart_involution(Vec3(1, 0, 0)), Error);
}

TEST_CASE("circle perimeter under all three metrics") {
  // L_v cap dF at v = (0,0,h) has perimeter 2 pi h.
  for (const double h : {0.5, 1.0}) {
    for (const Geometry K : {Geometry::hyperbolic, Geometry::euclidean, Geometry::spherical}) {
      const int n = 4000;
      double len = 0.0;
      for (int i = 0; i < n; ++i) {
        const double t0 = 2 * M_PI * i / n, t1 = 2 * M_PI * (i + 1) / n;
        const Vec3 a(h * std::cos(t0), h * std::sin(t0), h);
        const Vec3 b(h * std::cos(t1), h * std::sin(t1), h);
        const Vec3 mid = 0.5 * (a + b), d = b - a;
        len += std::sqrt(d.dot(ambient_metric(mid, K) * d));
      }
      CHECK(len == doctest::Approx(2 * M_PI * h).epsilon(1e-4));
    }
  }
}
