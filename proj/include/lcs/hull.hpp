#ifndef LCS_HULL_HPP
#define LCS_HULL_HPP

#include <string>

#include "lcs/holonomy.hpp"

namespace lcs {

// Closed convex polyhedral surface; coplanar faces merged into polygons with
// vertices in convex cyclic order.
struct Hull {
  std::vector<Vec3> points;                 // the input points (hull vertices a subset)
  std::vector<std::vector<int>> faces;      // indices into points
  std::vector<Vec3> face_normals;           // outward unit normals
};

Hull convex_hull_3d(const std::vector<Vec3>& pts);

struct EpsteinPennerFace {
  std::vector<Vec3> vertices;  // cyclic order in the face plane
  Vec3 support;                // v with x.v = -1 on the face
  double rho_hat = 0.0;
  std::vector<double> edge_lambdas;  // lambda of consecutive vertex pairs
};

struct EpsteinPennerResult {
  std::vector<EpsteinPennerFace> quotient_faces;
  int candidate_faces = 0;   // hull faces with elliptic plane
  int validated_faces = 0;   // candidates surviving the deeper-orbit check
  int unvalidated_faces = 0; // truncation-frontier faces, reported not used
  int orbit_size = 0;
};

// Finite-orbit Epstein-Penner hull of the decoration orbit: develops d,
// enumerates the orbit to `depth`, hulls it, keeps spacelike faces validated
// against the depth+2 orbit, and quotients faces by the holonomy group.
EpsteinPennerResult epstein_penner_faces(const DecoratedMetric& d, int depth);

enum class Chart { minkowski, cylinder };

// OBJ text for the quotient faces; lightlike rays from each face vertex are
// emitted as line elements, truncated at coordinate height ray_cap.
std::string export_mesh(const std::vector<EpsteinPennerFace>& faces, Chart chart,
                        double ray_cap);

} // namespace lcs

#endif
