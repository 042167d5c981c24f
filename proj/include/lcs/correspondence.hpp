#ifndef LCS_CORRESPONDENCE_HPP
#define LCS_CORRESPONDENCE_HPP

#include <optional>

#include "lcs/surface.hpp"

namespace lcs {

// Epstein-Penner metric map: Delaunay first, then l = 2 asinh(lambda),
// 2 lambda or 2 asin(lambda). K=+1 requires T* membership.
ConeMetric decorated_to_cone(const DecoratedMetric& d, Geometry K);

// Inverse direction: Delaunay first, then lambda = sinh(l/2), l/2 or sin(l/2).
// bps_convention uses lambda = l for K=0 (differs from the default by the
// dilation factor 2 between the two constructions).
DecoratedMetric cone_to_decorated(const ConeMetric& m, bool bps_convention = false);

// rho_hat of every Delaunay face; member iff all stay below 1.
struct TStarReport {
  bool member = false;
  double max_rho_hat = 0.0;
  bool boundary = false;            // within the tolerance band of rho_hat = 1
  std::vector<double> face_rho_hat; // per Delaunay face of `delaunay`
  DecoratedMetric delaunay;
};
TStarReport tstar_membership(const DecoratedMetric& d);

// lambda_e -> e^{(u_i+u_j)/2} lambda_e.
DecoratedMetric vertex_scale_decorated(const DecoratedMetric& d, const std::vector<double>& u);

// Discrete conformal change of a cone metric, routed through the decorated
// coordinates; Delaunay flips are handled internally.
ConeMetric vertex_scale_cone(const ConeMetric& m, const std::vector<double>& u);

// Least-squares solve of 2 ln(lambda2/lambda1) = u_i + u_j over all edges;
// the decorations are in one fiber iff the residual vanishes.
std::optional<std::vector<double>> same_fiber_test(const DecoratedMetric& a,
                                                   const DecoratedMetric& b);

// Both metrics to decorated coordinates, aligned by identical combinatorics,
// then the fiber test. Throws combinatorics_mismatch when the Delaunay
// triangulations cannot be identified (inconclusive, not false).
bool discretely_conformal_test(const ConeMetric& a, const ConeMetric& b);

// Mirror double of a fan-triangulated polygon. sides[i] joins vertex i to
// i+1 mod n; fan diagonals (0,2),...,(0,n-2) are required when n > 3.
ConeMetric doubled_polygon(Geometry K, const std::vector<double>& sides,
                           const std::vector<double>& fan_diagonals = {});

} // namespace lcs

#endif
