#include "lcs/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace lcs {

namespace {

Mat3 lorentz_inverse(const Mat3& a) {
  const Mat3 j = minkowski_form();
  return j * a.transpose() * j;
}

// Lift of the face across h, laid out against the stored lift of face_of(h).
// Returns the lifts of (from(o), from(next o), from(prev o)) for o = opp(h).
std::array<LightPoint, 3> continue_across(const DecoratedMetric& d, const Development& dev,
                                          int h) {
  const auto& tri = d.tri;
  const int o = tri.opp(h);
  const LightPoint a = dev.lift_from[h];          // from(h) = to(o)
  const LightPoint b = dev.lift_from[tri.next(h)];  // to(h) = from(o)
  const LightPoint apex = dev.lift_from[tri.prev(h)];
  const LightPoint w = complete_quad(a, b, apex, d.lambda[tri.edge_of(tri.prev(o))],
                                     d.lambda[tri.edge_of(tri.next(o))]);
  return {b, a, w};
}

Mat3 basis_of(const LightPoint& p, const LightPoint& q, const LightPoint& r) {
  Mat3 m;
  m.col(0) = p.v;
  m.col(1) = q.v;
  m.col(2) = r.v;
  return m;
}

} // namespace

Development develop(const DecoratedMetric& d) {
  validate(d);
  const auto& tri = d.tri;
  Development dev;
  dev.lift_from.resize(tri.n_halfedges());
  dev.cross.assign(tri.n_halfedges(), Mat3::Identity());
  dev.tree_edge.assign(tri.n_edges(), 0);
  dev.root_face = 0;

  std::vector<char> placed(tri.n_faces(), 0);
  {
    const auto hs = tri.face_halfedges(0);
    const auto t = lift_triangle(d.lambda[tri.edge_of(hs[0])], d.lambda[tri.edge_of(hs[2])],
                                 d.lambda[tri.edge_of(hs[1])]);
    for (int s = 0; s < 3; ++s) dev.lift_from[hs[s]] = t[s];
  }
  placed[0] = 1;

  std::deque<int> queue = {0};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int h : tri.face_halfedges(f)) {
      const int o = tri.opp(h);
      const int g = tri.face_of(o);
      if (placed[g]) continue;
      const auto lifted = continue_across(d, dev, h);
      dev.lift_from[o] = lifted[0];
      dev.lift_from[tri.next(o)] = lifted[1];
      dev.lift_from[tri.prev(o)] = lifted[2];
      dev.tree_edge[tri.edge_of(h)] = 1;
      placed[g] = 1;
      queue.push_back(g);
    }
  }

  // Chart-change matrices across non-tree edges.
  for (int e = 0; e < tri.n_edges(); ++e) {
    if (dev.tree_edge[e]) continue;
    const int h = tri.half(e, 0), o = tri.half(e, 1);
    const auto lifted = continue_across(d, dev, h);
    const Mat3 stored = basis_of(dev.lift_from[o], dev.lift_from[tri.next(o)],
                                 dev.lift_from[tri.prev(o)]);
    const Mat3 continued = basis_of(lifted[0], lifted[1], lifted[2]);
    dev.cross[h] = continued * stored.inverse();
    dev.cross[o] = lorentz_inverse(dev.cross[h]);
  }
  return dev;
}

void require_closed(const MarkedTriangulation& tri, const Loop& loop) {
  require(!loop.empty(), errc::open_loop, "empty dual loop");
  for (size_t k = 0; k < loop.size(); ++k) {
    const int h = loop[k], next = loop[(k + 1) % loop.size()];
    require(h >= 0 && h < tri.n_halfedges(), errc::open_loop, "halfedge out of range");
    require(tri.face_of(tri.opp(h)) == tri.face_of(next), errc::open_loop,
            "dual loop is not chained/closed");
  }
}

Mat3 holonomy(const Development& dev, const MarkedTriangulation& tri, const Loop& loop) {
  require_closed(tri, loop);
  Mat3 m = Mat3::Identity();
  for (int h : loop) m = m * dev.cross[h];
  return m;
}

Loop inverse_loop(const MarkedTriangulation& tri, const Loop& loop) {
  Loop out;
  out.reserve(loop.size());
  for (auto it = loop.rbegin(); it != loop.rend(); ++it) out.push_back(tri.opp(*it));
  return out;
}

Loop concat_loops(const Loop& a, const Loop& b) {
  Loop out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Loop dual_loop(const MarkedTriangulation& tri, int start_face, const std::vector<int>& edges) {
  Loop loop;
  int f = start_face;
  for (int e : edges) {
    const int h0 = tri.half(e, 0), h1 = tri.half(e, 1);
    int h = -1;
    if (tri.face_of(h0) == f) h = h0;
    else if (tri.face_of(h1) == f) h = h1;
    require(h >= 0, errc::open_loop, "edge not adjacent to the current face");
    loop.push_back(h);
    f = tri.face_of(tri.opp(h));
  }
  require(f == start_face, errc::open_loop, "edge sequence does not close up");
  return loop;
}

Loop transport_through_flip(const Loop& loop, const FlipRecord& rec,
                            const MarkedTriangulation& tri) {
  const int f1 = tri.face_of(rec.h), f2 = tri.face_of(rec.o);
  const auto connector = [&](int from, int to) {
    require((from == f1 && to == f2) || (from == f2 && to == f1), errc::open_loop,
            "flip transport broke outside the flipped quad");
    return from == f1 ? rec.h : rec.o;
  };
  Loop out;
  for (int h : loop) {
    if (!out.empty()) {
      const int prev_end = tri.face_of(tri.opp(out.back()));
      const int cur_start = tri.face_of(h);
      if (prev_end != cur_start) out.push_back(connector(prev_end, cur_start));
    }
    out.push_back(h);
  }
  const int end = tri.face_of(tri.opp(out.back()));
  const int start = tri.face_of(out.front());
  if (end != start) out.push_back(connector(end, start));
  return out;
}

Loop transport_through_flips(Loop loop, MarkedTriangulation pre,
                             const std::vector<FlipRecord>& log) {
  for (const FlipRecord& rec : log) {
    pre.flip(rec.edge);
    loop = transport_through_flip(loop, rec, pre);
  }
  return loop;
}

std::vector<Mat3> dev_generators(const Development& dev, const MarkedTriangulation& tri) {
  std::vector<Mat3> gens;
  for (int e = 0; e < tri.n_edges(); ++e)
    if (!dev.tree_edge[e]) gens.push_back(dev.cross[tri.half(e, 0)]);
  return gens;
}

std::vector<double> trace_invariants(const DecoratedMetric& d, const std::vector<Loop>& loops) {
  const Development dev = develop(d);
  std::vector<double> traces;
  traces.reserve(loops.size());
  for (const Loop& loop : loops) traces.push_back(holonomy(dev, d.tri, loop).trace());
  std::sort(traces.begin(), traces.end());
  return traces;
}

namespace {

// Cone points kept sorted by height for tolerance-based deduplication.
class PointSet {
public:
  explicit PointSet(double tol) : tol_(tol) {}

  bool insert(const Vec3& p) {
    const double band = tol_ * std::max(1.0, p[2]);
    auto lo = std::lower_bound(order_.begin(), order_.end(), p[2] - band);
    auto hi = std::upper_bound(order_.begin(), order_.end(), p[2] + band);
    for (auto it = lo; it != hi; ++it) {
      const Vec3& q = pts_[it - order_.begin()];
      if ((p - q).cwiseAbs().maxCoeff() <= band) return false;
    }
    const auto pos = std::upper_bound(order_.begin(), order_.end(), p[2]);
    const auto idx = pos - order_.begin();
    order_.insert(pos, p[2]);
    pts_.insert(pts_.begin() + idx, p);
    return true;
  }

  const std::vector<Vec3>& points() const { return pts_; }

private:
  double tol_;
  std::vector<double> order_;
  std::vector<Vec3> pts_;
};

} // namespace

std::vector<Vec3> orbit(const std::vector<Vec3>& seeds, const std::vector<Mat3>& gens, int depth,
                        double dedupe_tol) {
  require(depth >= 0, errc::domain_error, "orbit depth must be nonnegative");
  std::vector<Mat3> moves;
  for (const Mat3& g : gens) {
    moves.push_back(g);
    moves.push_back(lorentz_inverse(g));
  }
  PointSet set(dedupe_tol);
  std::vector<Vec3> frontier;
  for (const Vec3& s : seeds)
    if (set.insert(s)) frontier.push_back(s);
  for (int level = 0; level < depth; ++level) {
    std::vector<Vec3> next;
    for (const Vec3& p : frontier)
      for (const Mat3& g : moves) {
        const Vec3 q = g * p;
        if (set.insert(q)) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return set.points();
}

std::vector<Mat3> group_elements(const std::vector<Mat3>& gens, int depth) {
  std::vector<Mat3> moves;
  for (const Mat3& g : gens) {
    moves.push_back(g);
    moves.push_back(lorentz_inverse(g));
  }
  std::vector<Mat3> elements = {Mat3::Identity()};
  const auto known = [&](const Mat3& m) {
    for (const Mat3& e : elements) {
      const double scale = std::max(1.0, e.cwiseAbs().maxCoeff());
      if ((m - e).cwiseAbs().maxCoeff() <= 1e-8 * scale) return true;
    }
    return false;
  };
  size_t frontier_begin = 0;
  for (int level = 0; level < depth; ++level) {
    const size_t frontier_end = elements.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i)
      for (const Mat3& g : moves) {
        const Mat3 m = elements[i] * g;
        if (!known(m)) elements.push_back(m);
      }
    frontier_begin = frontier_end;
  }
  return elements;
}

std::vector<Vec3> decoration_seeds(const Development& dev, const MarkedTriangulation& tri) {
  std::vector<Vec3> seeds;
  seeds.reserve(tri.n_vertices());
  for (int v = 0; v < tri.n_vertices(); ++v)
    seeds.push_back(dev.lift_from[tri.vertex_halfedge(v)].v);
  return seeds;
}

} // namespace lcs
