#ifndef LCS_TRIANGLE_HPP
#define LCS_TRIANGLE_HPP

#include <array>

#include "lcs/minkowski.hpp"

namespace lcs {

// Side lengths of a geodesic triangle in H^2, E^2 or S^2 (radians when K=+1).
struct TriangleLengths {
  Geometry K = Geometry::euclidean;
  double a = 0.0, b = 0.0, c = 0.0;
};

struct TriangleDiagnostics {
  bool positive = false;
  bool triangle_inequality = false;
  bool spherical_bounds = true;  // sides < pi and perimeter < 2 pi (K=+1 only)
  bool spherical_convex = true;  // circumradius < pi/2 via unit-sphere embedding (K=+1 only)

  bool ok() const {
    return positive && triangle_inequality && spherical_bounds && spherical_convex;
  }
};

TriangleDiagnostics validate(const TriangleLengths& t);
void require_valid(const TriangleLengths& t);

// Interior angles (alpha opposite a, ...), each in (0, pi).
std::array<double, 3> triangle_angles(const TriangleLengths& t);

// Heron for K=0, angle defect for K=-1, angle excess for K=+1.
double triangle_area(const TriangleLengths& t);

// Circumradius via the Minkowski lift of the lambda-dictionary image.
// Throws non_cyclic (K=-1 non-cyclic triangle) or not_convex_spherical.
double circumradius(const TriangleLengths& t);

// Law of cosines helpers shared with the flip machinery.
double angle_opposite(double a, double b, double c, Geometry K);
double side_from_angle(double b, double c, double alpha, Geometry K);

// The lambda-length dictionary: lambda = sinh(l/2), l/2 or sin(l/2).
double lambda_from_length(double len, Geometry K);
double length_from_lambda(double lam, Geometry K);

} // namespace lcs

#endif
