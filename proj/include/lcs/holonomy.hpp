#ifndef LCS_HOLONOMY_HPP
#define LCS_HOLONOMY_HPP

#include "lcs/surface.hpp"

namespace lcs {

// Per-face lifts over a dual spanning tree plus the chart-change matrix for
// every halfedge crossing (identity on tree edges).
struct Development {
  std::vector<LightPoint> lift_from;  // per halfedge: lift of its tail vertex
  std::vector<Mat3> cross;            // per halfedge
  std::vector<char> tree_edge;        // per edge
  int root_face = 0;
};

Development develop(const DecoratedMetric& d);

// A dual loop: halfedges crossed in order, consecutive faces chained, closed.
using Loop = std::vector<int>;

void require_closed(const MarkedTriangulation& tri, const Loop& loop);
Mat3 holonomy(const Development& dev, const MarkedTriangulation& tri, const Loop& loop);

Loop inverse_loop(const MarkedTriangulation& tri, const Loop& loop);
Loop concat_loops(const Loop& a, const Loop& b);

// Crossing sequence through the given edges starting at start_face.
Loop dual_loop(const MarkedTriangulation& tri, int start_face, const std::vector<int>& edges);

// Reroute a dual loop through one flip (tri must already be post-flip);
// connectors across the new diagonal are inserted where chaining broke.
Loop transport_through_flip(const Loop& loop, const FlipRecord& rec,
                            const MarkedTriangulation& tri);
// Replays the flip log on a copy of the pre-flip triangulation.
Loop transport_through_flips(Loop loop, MarkedTriangulation pre,
                             const std::vector<FlipRecord>& log);

// Generators of the holonomy group: cross matrices of non-tree halfedges.
std::vector<Mat3> dev_generators(const Development& dev, const MarkedTriangulation& tri);

// Sorted traces of the holonomy over a fixed loop set.
std::vector<double> trace_invariants(const DecoratedMetric& d, const std::vector<Loop>& loops);

// All images of the seeds under words of length <= depth in gens and their
// inverses, deduplicated at relative tolerance.
std::vector<Vec3> orbit(const std::vector<Vec3>& seeds, const std::vector<Mat3>& gens, int depth,
                        double dedupe_tol = 1e-8);

// All group elements of word length <= depth (deduplicated).
std::vector<Mat3> group_elements(const std::vector<Mat3>& gens, int depth);

// One lifted decoration point per marked vertex.
std::vector<Vec3> decoration_seeds(const Development& dev, const MarkedTriangulation& tri);

} // namespace lcs

#endif
