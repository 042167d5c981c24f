#ifndef LCS_MINKOWSKI_HPP
#define LCS_MINKOWSKI_HPP

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <utility>

#include "lcs/error.hpp"

namespace lcs {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Curvature sign of the target geometry / ambient Lorentzian space form.
enum class Geometry : int { hyperbolic = -1, euclidean = 0, spherical = 1 };

inline int geometry_sign(Geometry K) { return static_cast<int>(K); }
Geometry geometry_from_int(int k);

namespace tol {
inline constexpr double cone = 1e-9;    // light-cone membership, relative to x3^2
inline constexpr double flat_band = 1e-9; // Delaunay Flat band on w.v + 1
inline constexpr double pair = 1e-12;   // degenerate-pair threshold, relative
inline constexpr double tstar = 1e-9;   // T* boundary band on rho_hat
} // namespace tol

// Scalar product of signature (+,+,-): x.y = x1 y1 + x2 y2 - x3 y3.
inline double mdot(const Vec3& x, const Vec3& y) {
  return x[0] * y[0] + x[1] * y[1] - x[2] * y[2];
}

inline Mat3 minkowski_form() {
  Mat3 j = Mat3::Identity();
  j(2, 2) = -1.0;
  return j;
}

// Point of the future light cone, x.x = 0, x3 > 0 (never the origin).
struct LightPoint {
  Vec3 v;

  explicit LightPoint(const Vec3& p);
  LightPoint() : v(Vec3::Zero()) {}

  double x1() const { return v[0]; }
  double x2() const { return v[1]; }
  double x3() const { return v[2]; }
};

inline double mdot(const LightPoint& x, const LightPoint& y) { return mdot(x.v, y.v); }

// Spacelike affine plane {x : x.w = w.w} meeting the cone along an ellipse.
// w is the on-plane center (future timelike), rho_hat = sqrt(-w.w) the
// circumparameter. The support vector v with x.v = -1 on the plane is -w/(w.w).
struct EllipticPlane {
  Vec3 w;
  double rho_hat = 0.0;

  Vec3 support() const { return -w / mdot(w, w); }
};

enum class EdgeStatus { Strict, Flat, Violated };
const char* edge_status_name(EdgeStatus s);

// lambda = sqrt(-x.y/2) = e^{l'/2} for the horocycle signed distance l'.
// Throws degenerate_pair on (nearly) proportional rays.
double lambda_of(const LightPoint& x, const LightPoint& y);

// Lengths of the straight segment [x,y] under the three ambient metrics:
// sinh(h/2) = e/2 = sin(s/2) = lambda. The spherical one exists iff lambda < 1.
struct SegmentLengths {
  double hyperbolic;
  double euclidean;
  std::optional<double> spherical;
};
SegmentLengths segment_lengths(const LightPoint& x, const LightPoint& y);
double segment_length(const LightPoint& x, const LightPoint& y, Geometry K);

// ((h,0,h), (-h,0,h)) with h = sqrt(t/2), so that x.y = -t.
std::pair<LightPoint, LightPoint> standard_pair(double t);

// The unique A in SO0(2,1) sending (x, y) to the standard pair with the same x.y.
Mat3 normalize_pair(const LightPoint& x, const LightPoint& y);

// Plant a triangle with prescribed pairwise lambdas on the cone:
// x = (h,0,h), y = (-h,0,h) with h = l12, z in the x2 > 0 half-space.
std::array<LightPoint, 3> lift_triangle(double l12, double l13, double l23);

// Fourth point of a quad: the light point w with lambda(x,w) = lam_xw and
// lambda(z,w) = lam_zw on the opposite side of the plane of (x,z) from y.
LightPoint complete_quad(const LightPoint& x, const LightPoint& z, const LightPoint& y,
                         double lam_xw, double lam_zw);

// Plane through three cone points, x.v = y.v = z.v = -1; nullopt when the
// section is a parabola or hyperbola (the hyperbolic non-cyclic case).
std::optional<EllipticPlane> plane_center(const LightPoint& x, const LightPoint& y,
                                          const LightPoint& z);

// Convexity of the two lifted triangles (x,y,z), (x,z,w) sharing edge xz,
// classified by w.v against -1 with the Flat band. Throws not_elliptic.
EdgeStatus delaunay_lift_test(const LightPoint& x, const LightPoint& y, const LightPoint& z,
                              const LightPoint& w);

// Same classification without requiring an elliptic plane: falls back to the
// graph test x3 = f(x1,x2) when the plane of (x,y,z) is not elliptic. A
// non-elliptic plane never yields Flat.
EdgeStatus quad_convexity(const LightPoint& x, const LightPoint& y, const LightPoint& z,
                          const LightPoint& w);

// Ambient metric g_K(x) as a symmetric matrix; g_0 = diag(1,1,-1).
Mat3 ambient_metric(const Vec3& x, Geometry K);

// Composite-midpoint quadrature of the g_K length of the affine segment [x,y].
double numeric_segment_length(const LightPoint& x, const LightPoint& y, Geometry K, int steps);

// Length of the boundary arc cut on the cone by the plane of slope k through
// the standard pair of half-width h: 2 h arccos(-k) / sqrt(1-k^2).
double cone_section_arc_length(double h, double k);

// (x1,x2,x3) -> (x1/x3, x2/x3, 1/x3); swaps the Minkowski and cylinder charts.
Vec3 chart_involution(const Vec3& x);

// Checks A^T J A = J, det A = 1 (orientation), A e3 future.
bool is_so21(const Mat3& a, double eps = 1e-10);

} // namespace lcs

#endif
