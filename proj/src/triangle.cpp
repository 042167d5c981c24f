#include "lcs/triangle.hpp"

#include <algorithm>
#include <cmath>

namespace lcs {

namespace {

double clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

// Gram matrix of the three unit vertex vectors; PD iff the triangle embeds.
// Returns the distance from the origin to the vertex plane (0 when singular).
double spherical_plane_distance(const TriangleLengths& t) {
  const double ca = std::cos(t.a), cb = std::cos(t.b), cc = std::cos(t.c);
  Mat3 gram;
  gram << 1.0, cc, cb, cc, 1.0, ca, cb, ca, 1.0;
  Eigen::LLT<Mat3> llt(gram);
  if (llt.info() != Eigen::Success) return 0.0;
  const Mat3 l = llt.matrixL();
  // Row i of L are the coordinates of vertex i.
  const Vec3 v0 = l.row(0), v1 = l.row(1), v2 = l.row(2);
  const Vec3 n = (v1 - v0).cross(v2 - v0);
  const double nn = n.norm();
  if (nn <= 0.0) return 0.0;
  return std::abs(n.dot(v0)) / nn;
}

} // namespace

TriangleDiagnostics validate(const TriangleLengths& t) {
  TriangleDiagnostics d;
  d.positive = t.a > 0.0 && t.b > 0.0 && t.c > 0.0;
  d.triangle_inequality =
      d.positive && t.a < t.b + t.c && t.b < t.a + t.c && t.c < t.a + t.b;
  if (t.K == Geometry::spherical) {
    constexpr double pi = M_PI;
    d.spherical_bounds = d.positive && t.a < pi && t.b < pi && t.c < pi &&
                         t.a + t.b + t.c < 2.0 * pi;
    d.spherical_convex = false;
    if (d.triangle_inequality && d.spherical_bounds)
      d.spherical_convex = spherical_plane_distance(t) > 0.0;
  }
  return d;
}

void require_valid(const TriangleLengths& t) {
  const TriangleDiagnostics d = validate(t);
  require(d.positive && d.triangle_inequality, errc::invalid_triangle,
          "side lengths do not form a triangle");
  if (t.K == Geometry::spherical) {
    require(d.spherical_bounds, errc::invalid_triangle, "spherical side bounds violated");
    require(d.spherical_convex, errc::not_convex_spherical,
            "spherical triangle is not convex (degenerate vertex configuration)");
  }
}

double angle_opposite(double a, double b, double c, Geometry K) {
  switch (K) {
    case Geometry::euclidean:
      return std::acos(clamp1((b * b + c * c - a * a) / (2.0 * b * c)));
    case Geometry::hyperbolic:
      return std::acos(clamp1((std::cosh(b) * std::cosh(c) - std::cosh(a)) /
                              (std::sinh(b) * std::sinh(c))));
    case Geometry::spherical:
      return std::acos(clamp1((std::cos(a) - std::cos(b) * std::cos(c)) /
                              (std::sin(b) * std::sin(c))));
  }
  fail(errc::domain_error, "bad geometry");
}

double side_from_angle(double b, double c, double alpha, Geometry K) {
  switch (K) {
    case Geometry::euclidean: {
      const double s2 = b * b + c * c - 2.0 * b * c * std::cos(alpha);
      return std::sqrt(std::max(s2, 0.0));
    }
    case Geometry::hyperbolic:
      return std::acosh(std::max(
          1.0, std::cosh(b) * std::cosh(c) - std::sinh(b) * std::sinh(c) * std::cos(alpha)));
    case Geometry::spherical:
      return std::acos(
          clamp1(std::cos(b) * std::cos(c) + std::sin(b) * std::sin(c) * std::cos(alpha)));
  }
  fail(errc::domain_error, "bad geometry");
}

std::array<double, 3> triangle_angles(const TriangleLengths& t) {
  require_valid(t);
  return {angle_opposite(t.a, t.b, t.c, t.K), angle_opposite(t.b, t.c, t.a, t.K),
          angle_opposite(t.c, t.a, t.b, t.K)};
}

double triangle_area(const TriangleLengths& t) {
  require_valid(t);
  if (t.K == Geometry::euclidean) {
    // Heron with sorted sides for stability.
    double a = t.a, b = t.b, c = t.c;
    if (a < b) std::swap(a, b);
    if (a < c) std::swap(a, c);
    if (b < c) std::swap(b, c);
    const double s = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    return 0.25 * std::sqrt(std::max(s, 0.0));
  }
  const auto ang = triangle_angles(t);
  const double sum = ang[0] + ang[1] + ang[2];
  return t.K == Geometry::hyperbolic ? M_PI - sum : sum - M_PI;
}

double lambda_from_length(double len, Geometry K) {
  require(len > 0.0, errc::invalid_triangle, "edge length must be positive");
  switch (K) {
    case Geometry::hyperbolic: return std::sinh(len / 2.0);
    case Geometry::euclidean: return len / 2.0;
    case Geometry::spherical:
      require(len < M_PI, errc::invalid_triangle, "spherical edge length must be < pi");
      return std::sin(len / 2.0);
  }
  fail(errc::domain_error, "bad geometry");
}

double length_from_lambda(double lam, Geometry K) {
  require(lam > 0.0, errc::degenerate_pair, "lambda must be positive");
  switch (K) {
    case Geometry::hyperbolic: return 2.0 * std::asinh(lam);
    case Geometry::euclidean: return 2.0 * lam;
    case Geometry::spherical:
      require(lam < 1.0, errc::spherical_undefined,
              "lambda >= 1 has no spherical edge length");
      return 2.0 * std::asin(lam);
  }
  fail(errc::domain_error, "bad geometry");
}

double circumradius(const TriangleLengths& t) {
  require_valid(t);
  const double la = lambda_from_length(t.a, t.K);
  const double lb = lambda_from_length(t.b, t.K);
  const double lc = lambda_from_length(t.c, t.K);
  // Pairing: (x,y) carries side c, (x,z) side b, (y,z) side a.
  const auto lift = lift_triangle(lc, lb, la);
  const auto plane = plane_center(lift[0], lift[1], lift[2]);
  if (!plane.has_value()) {
    require(t.K == Geometry::hyperbolic, errc::not_elliptic,
            "unexpected non-elliptic plane for K >= 0");
    fail(errc::non_cyclic, "hyperbolic triangle has no circumscribed circle");
  }
  switch (t.K) {
    case Geometry::euclidean: return plane->rho_hat;
    case Geometry::hyperbolic: return std::asinh(plane->rho_hat);
    case Geometry::spherical:
      require(plane->rho_hat < 1.0, errc::not_convex_spherical,
              "spherical circumradius at or beyond pi/2");
      return std::asin(plane->rho_hat);
  }
  fail(errc::domain_error, "bad geometry");
}

} // namespace lcs
