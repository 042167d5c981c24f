#ifndef LCS_SURFACE_HPP
#define LCS_SURFACE_HPP

#include <vector>

#include "lcs/triangle.hpp"
#include "lcs/triangulation.hpp"

namespace lcs {

// Constant-curvature cone metric: one positive geodesic length per edge.
struct ConeMetric {
  MarkedTriangulation tri;
  Geometry K = Geometry::euclidean;
  std::vector<double> length;
};

// Decorated hyperbolic structure in Penner coordinates: lambda = e^{l'/2} > 0.
struct DecoratedMetric {
  MarkedTriangulation tri;
  std::vector<double> lambda;
};

void validate(const ConeMetric& m);
void validate(const DecoratedMetric& m);

TriangleLengths face_lengths(const ConeMetric& m, int f);

// The five lambda lengths of the quad at an interior edge. Self-adjacent
// configurations (the two faces share several edges, or coincide) read their
// values per face, which unfolds the quad in the universal cover.
struct QuadLambdas {
  double diag, zy, yx, xw, wz;
};
QuadLambdas quad_lambdas(const ConeMetric& m, int e);
QuadLambdas quad_lambdas(const DecoratedMetric& m, int e);

std::vector<double> cone_angles(const ConeMetric& m);
std::vector<double> singular_curvature(const ConeMetric& m);
double total_area(const ConeMetric& m);
// Sum kappa + K Area - 2 pi (2 - 2g).
double gauss_bonnet_residual(const ConeMetric& m);

// Delaunay classification of the quad at e through the light-cone lift.
// Throws not_elliptic if the first face has no elliptic lift plane.
EdgeStatus edge_status(const ConeMetric& m, int e);
EdgeStatus edge_status(const DecoratedMetric& m, int e);

// Same classification, but non-cyclic faces fall back to the convexity test
// instead of throwing; used by the flip scheduler.
EdgeStatus edge_status_loose(const ConeMetric& m, int e);
EdgeStatus edge_status_loose(const DecoratedMetric& m, int e);

// Flip the diagonal at e. Decorated metrics measure the new lambda on the
// lifted opposite diagonal; cone metrics develop the quad in the K-geometry.
FlipRecord flip(DecoratedMetric& m, int e);
FlipRecord flip(ConeMetric& m, int e);

struct DelaunayLog {
  std::vector<FlipRecord> flips;
};

// Flip lowest-index violated edges until none remain (cap 50 E flips).
DelaunayLog make_delaunay(DecoratedMetric& m);
DelaunayLog make_delaunay(ConeMetric& m);

bool is_delaunay(const ConeMetric& m);
bool is_delaunay(const DecoratedMetric& m);

// Faces grouped across Flat edges into the maximal cyclic polygons of the
// Delaunay decomposition. Groups are sorted; each is checked to share one
// elliptic plane.
std::vector<std::vector<int>> delaunay_decomposition(const ConeMetric& m);
std::vector<std::vector<int>> delaunay_decomposition(const DecoratedMetric& m);

// Boundary halfedge cycles of decomposition groups (empty for closed groups
// such as doubled polygons whose edges are all Flat).
std::vector<std::vector<int>> decomposition_boundaries(const MarkedTriangulation& tri,
                                                       const std::vector<std::vector<int>>& groups,
                                                       const std::vector<EdgeStatus>& status);

} // namespace lcs

#endif
