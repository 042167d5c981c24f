#include "lcs/minkowski.hpp"

#include <cmath>

namespace lcs {

const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_file: return "bad_file";
    case errc::invalid_surface: return "invalid_surface";
    case errc::degenerate_pair: return "degenerate_pair";
    case errc::spherical_undefined: return "spherical_undefined";
    case errc::not_elliptic: return "not_elliptic";
    case errc::outside_chart: return "outside_chart";
    case errc::invalid_triangle: return "invalid_triangle";
    case errc::non_cyclic: return "non_cyclic";
    case errc::not_convex_spherical: return "not_convex_spherical";
    case errc::flip_not_embeddable: return "flip_not_embeddable";
    case errc::not_in_tstar: return "not_in_tstar";
    case errc::combinatorics_mismatch: return "combinatorics_mismatch";
    case errc::invalid_polygon: return "invalid_polygon";
    case errc::open_loop: return "open_loop";
    case errc::degenerate_input: return "degenerate_input";
    case errc::insufficient_depth: return "insufficient_depth";
    case errc::incompatible_curvature: return "incompatible_curvature";
    case errc::domain_error: return "domain_error";
    case errc::iteration_cap_exceeded: return "iteration_cap_exceeded";
    case errc::no_convergence: return "no_convergence";
  }
  return "unknown";
}

const char* edge_status_name(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::Strict: return "Strict";
    case EdgeStatus::Flat: return "Flat";
    case EdgeStatus::Violated: return "Violated";
  }
  return "unknown";
}

Geometry geometry_from_int(int k) {
  require(k == -1 || k == 0 || k == 1, errc::domain_error, "curvature sign must be -1, 0 or 1");
  return static_cast<Geometry>(k);
}

LightPoint::LightPoint(const Vec3& p) : v(p) {
  require(p.allFinite(), errc::degenerate_input, "light point has non-finite coordinates");
  require(p[2] > 0.0, errc::degenerate_input, "light point must have x3 > 0");
  require(std::abs(mdot(p, p)) <= tol::cone * p[2] * p[2], errc::degenerate_input,
          "point is not on the light cone");
}

double lambda_of(const LightPoint& x, const LightPoint& y) {
  const double t = -mdot(x, y);
  require(t > tol::pair * x.x3() * y.x3(), errc::degenerate_pair,
          "light points are (nearly) positively proportional");
  return std::sqrt(t / 2.0);
}

SegmentLengths segment_lengths(const LightPoint& x, const LightPoint& y) {
  const double lam = lambda_of(x, y);
  SegmentLengths out;
  out.hyperbolic = 2.0 * std::asinh(lam);
  out.euclidean = 2.0 * lam;
  if (lam < 1.0) out.spherical = 2.0 * std::asin(lam);
  return out;
}

double segment_length(const LightPoint& x, const LightPoint& y, Geometry K) {
  const SegmentLengths sl = segment_lengths(x, y);
  switch (K) {
    case Geometry::hyperbolic: return sl.hyperbolic;
    case Geometry::euclidean: return sl.euclidean;
    case Geometry::spherical:
      require(sl.spherical.has_value(), errc::spherical_undefined,
              "segment leaves F*, spherical length undefined (lambda >= 1)");
      return *sl.spherical;
  }
  fail(errc::domain_error, "bad geometry");
}

std::pair<LightPoint, LightPoint> standard_pair(double t) {
  require(t > 0.0, errc::degenerate_pair, "standard pair needs t > 0");
  const double h = std::sqrt(t / 2.0);
  return {LightPoint(Vec3(h, 0.0, h)), LightPoint(Vec3(-h, 0.0, h))};
}

namespace {

// Lorentzian cross product: (a x b).c = det[a;b;c] with respect to mdot.
Vec3 lorentz_cross(const Vec3& a, const Vec3& b) {
  return Vec3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[1] * b[0] - a[0] * b[1]);
}

Mat3 lorentz_inverse(const Mat3& a) {
  const Mat3 j = minkowski_form();
  return j * a.transpose() * j;
}

} // namespace

Mat3 normalize_pair(const LightPoint& x, const LightPoint& y) {
  const double t = -mdot(x, y);
  require(t > tol::pair * x.x3() * y.x3(), errc::degenerate_pair,
          "cannot normalize a degenerate pair");
  const double s = std::sqrt(2.0 * t);
  const Vec3 timelike = (x.v + y.v) / s;   // unit future timelike
  const Vec3 spacelike = (x.v - y.v) / s;  // unit spacelike
  const Vec3 third = lorentz_cross(timelike, spacelike);
  Mat3 basis;
  basis.col(0) = spacelike;
  basis.col(1) = third;
  basis.col(2) = timelike;
  return lorentz_inverse(basis);
}

std::array<LightPoint, 3> lift_triangle(double l12, double l13, double l23) {
  require(l12 > 0.0 && l13 > 0.0 && l23 > 0.0, errc::degenerate_pair,
          "lambda lengths must be positive");
  const double h = l12;
  const double a = (l23 * l23 - l13 * l13) / h;
  const double c = (l23 * l23 + l13 * l13) / h;
  const double b = 2.0 * l13 * l23 / h;
  return {LightPoint(Vec3(h, 0.0, h)), LightPoint(Vec3(-h, 0.0, h)), LightPoint(Vec3(a, b, c))};
}

LightPoint complete_quad(const LightPoint& x, const LightPoint& z, const LightPoint& y,
                         double lam_xw, double lam_zw) {
  require(lam_xw > 0.0 && lam_zw > 0.0, errc::degenerate_pair, "lambda lengths must be positive");
  const Mat3 motion = normalize_pair(x, z);
  const double h = lambda_of(x, z);
  const double side = motion.row(1).dot(y.v) >= 0.0 ? -1.0 : 1.0;
  const Vec3 local((lam_zw * lam_zw - lam_xw * lam_xw) / h, side * 2.0 * lam_xw * lam_zw / h,
                   (lam_zw * lam_zw + lam_xw * lam_xw) / h);
  return LightPoint(lorentz_inverse(motion) * local);
}

std::optional<EllipticPlane> plane_center(const LightPoint& x, const LightPoint& y,
                                          const LightPoint& z) {
  Mat3 m;
  m.row(0) << x.v[0], x.v[1], -x.v[2];
  m.row(1) << y.v[0], y.v[1], -y.v[2];
  m.row(2) << z.v[0], z.v[1], -z.v[2];
  Eigen::PartialPivLU<Mat3> lu(m);
  const double scale = x.x3() * y.x3() * z.x3();
  // Linearly dependent points span a plane through the origin; the section
  // degenerates to rays, which is not an ellipse either.
  if (std::abs(lu.determinant()) <= 1e-14 * std::max(1.0, scale)) return std::nullopt;
  const Vec3 v = lu.solve(Vec3(-1.0, -1.0, -1.0));
  const double vv = mdot(v, v);
  if (!(vv < 0.0) || !(v[2] > 0.0)) return std::nullopt;
  EllipticPlane plane;
  plane.w = -v / vv;
  plane.rho_hat = 1.0 / std::sqrt(-vv);
  return plane;
}

EdgeStatus delaunay_lift_test(const LightPoint& x, const LightPoint& y, const LightPoint& z,
                              const LightPoint& w) {
  const auto plane = plane_center(x, y, z);
  require(plane.has_value(), errc::not_elliptic, "Delaunay lift test on a non-elliptic plane");
  const double s = mdot(w.v, plane->support());
  if (std::abs(s + 1.0) <= tol::flat_band) return EdgeStatus::Flat;
  return s < -1.0 ? EdgeStatus::Strict : EdgeStatus::Violated;
}

EdgeStatus quad_convexity(const LightPoint& x, const LightPoint& y, const LightPoint& z,
                          const LightPoint& w) {
  const auto plane = plane_center(x, y, z);
  if (plane.has_value()) {
    const double s = mdot(w.v, plane->support());
    if (std::abs(s + 1.0) <= tol::flat_band) return EdgeStatus::Flat;
    return s < -1.0 ? EdgeStatus::Strict : EdgeStatus::Violated;
  }
  // Non-elliptic face plane: never cocircular, classify by the x3-graph test.
  const Vec3 n = (y.v - x.v).cross(z.v - x.v);
  if (std::abs(n[2]) <= 1e-14 * n.norm()) return EdgeStatus::Violated;
  const double s = (w.v - x.v).dot(n) * (n[2] > 0.0 ? 1.0 : -1.0);
  return s > 0.0 ? EdgeStatus::Strict : EdgeStatus::Violated;
}

Mat3 ambient_metric(const Vec3& x, Geometry K) {
  Mat3 g;
  const double q = mdot(x, x);
  switch (K) {
    case Geometry::euclidean:
      return minkowski_form();
    case Geometry::spherical: {
      require(q > -1.0, errc::outside_chart, "point outside the de Sitter chart (x.x <= -1)");
      const double f = 1.0 / ((1.0 + q) * (1.0 + q));
      g << 1.0 + x[1] * x[1] - x[2] * x[2], -x[0] * x[1], x[0] * x[2],
           -x[0] * x[1], 1.0 + x[0] * x[0] - x[2] * x[2], x[1] * x[2],
           x[0] * x[2], x[1] * x[2], -1.0 - x[0] * x[0] - x[1] * x[1];
      return f * g;
    }
    case Geometry::hyperbolic: {
      require(q < 1.0, errc::outside_chart, "point outside the anti-de Sitter chart (x.x >= 1)");
      const double f = 1.0 / ((1.0 - q) * (1.0 - q));
      g << 1.0 - x[1] * x[1] + x[2] * x[2], x[0] * x[1], -x[0] * x[2],
           x[0] * x[1], 1.0 - x[0] * x[0] + x[2] * x[2], -x[1] * x[2],
           -x[0] * x[2], -x[1] * x[2], -1.0 + x[0] * x[0] + x[1] * x[1];
      return f * g;
    }
  }
  fail(errc::domain_error, "bad geometry");
}

double numeric_segment_length(const LightPoint& x, const LightPoint& y, Geometry K, int steps) {
  require(steps >= 1, errc::domain_error, "need at least one quadrature step");
  if (K == Geometry::spherical) {
    // Most timelike segment point is the midpoint with m.m = -lambda^2.
    require(lambda_of(x, y) < 1.0, errc::outside_chart, "segment leaves F*");
  }
  const Vec3 d = y.v - x.v;
  double sum = 0.0;
  for (int i = 0; i < steps; ++i) {
    const Vec3 p = x.v + ((i + 0.5) / steps) * d;
    const Mat3 g = ambient_metric(p, K);
    sum += std::sqrt(d.dot(g * d));
  }
  return sum / steps;
}

double cone_section_arc_length(double h, double k) {
  require(h > 0.0, errc::domain_error, "arc length needs h > 0");
  require(std::abs(k) < 1.0, errc::domain_error, "arc length needs |k| < 1");
  return 2.0 * h * std::acos(-k) / std::sqrt(1.0 - k * k);
}

Vec3 chart_involution(const Vec3& x) {
  require(x[2] != 0.0, errc::domain_error, "chart involution undefined at x3 = 0");
  return Vec3(x[0] / x[2], x[1] / x[2], 1.0 / x[2]);
}

bool is_so21(const Mat3& a, double eps) {
  const Mat3 j = minkowski_form();
  const Mat3 residual = a.transpose() * j * a - j;
  if (residual.cwiseAbs().maxCoeff() > eps) return false;
  if (std::abs(a.determinant() - 1.0) > eps) return false;
  return a(2, 2) > 0.0;
}

} // namespace lcs
