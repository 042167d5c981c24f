#include "lcs/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lcs {

void validate(const ConeMetric& m) {
  require(static_cast<int>(m.length.size()) == m.tri.n_edges(), errc::invalid_surface,
          "length count does not match edge count");
  for (int f = 0; f < m.tri.n_faces(); ++f) require_valid(face_lengths(m, f));
}

void validate(const DecoratedMetric& m) {
  require(static_cast<int>(m.lambda.size()) == m.tri.n_edges(), errc::invalid_surface,
          "lambda count does not match edge count");
  for (double l : m.lambda)
    require(l > 0.0 && std::isfinite(l), errc::invalid_surface, "lambda lengths must be positive");
}

TriangleLengths face_lengths(const ConeMetric& m, int f) {
  const auto hs = m.tri.face_halfedges(f);
  TriangleLengths t;
  t.K = m.K;
  t.a = m.length[m.tri.edge_of(hs[1])];
  t.b = m.length[m.tri.edge_of(hs[2])];
  t.c = m.length[m.tri.edge_of(hs[0])];
  return t;
}

namespace {

template <class Metric>
QuadLambdas quad_lambdas_impl(const Metric& m, int e, double (*to_lambda)(const Metric&, int)) {
  const auto& tri = m.tri;
  require(e >= 0 && e < tri.n_edges(), errc::domain_error, "edge id out of range");
  const int h = tri.half(e, 0), o = tri.half(e, 1);
  QuadLambdas q;
  q.diag = to_lambda(m, e);
  q.zy = to_lambda(m, tri.edge_of(tri.next(h)));
  q.yx = to_lambda(m, tri.edge_of(tri.prev(h)));
  q.xw = to_lambda(m, tri.edge_of(tri.next(o)));
  q.wz = to_lambda(m, tri.edge_of(tri.prev(o)));
  return q;
}

double cone_edge_lambda(const ConeMetric& m, int e) { return lambda_from_length(m.length[e], m.K); }
double dec_edge_lambda(const DecoratedMetric& m, int e) { return m.lambda[e]; }

// Lifted quad in standard position: x, z the diagonal, y above, w below.
struct QuadLift {
  LightPoint x, z, y, w;
};

QuadLift lift_quad(const QuadLambdas& q) {
  const auto t = lift_triangle(q.diag, q.yx, q.zy);
  QuadLift lift{t[0], t[1], t[2], LightPoint()};
  const double h = q.diag;
  lift.w = LightPoint(Vec3((q.wz * q.wz - q.xw * q.xw) / h, -2.0 * q.xw * q.wz / h,
                           (q.wz * q.wz + q.xw * q.xw) / h));
  return lift;
}

template <class Metric>
EdgeStatus edge_status_impl(const Metric& m, int e, bool loose) {
  const QuadLift lift = lift_quad(quad_lambdas(m, e));
  return loose ? quad_convexity(lift.x, lift.y, lift.z, lift.w)
               : delaunay_lift_test(lift.x, lift.y, lift.z, lift.w);
}

template <class Metric>
DelaunayLog make_delaunay_impl(Metric& m) {
  DelaunayLog log;
  const int ne = m.tri.n_edges();
  const long cap = 50L * ne;
  long flips = 0;
  for (;;) {
    int target = -1;
    for (int e = 0; e < ne; ++e) {
      if (edge_status_loose(m, e) == EdgeStatus::Violated) {
        target = e;
        break;
      }
    }
    if (target < 0) break;
    require(flips < cap, errc::iteration_cap_exceeded,
            "Delaunay flip cap reached; metric is numerically suspect");
    log.flips.push_back(flip(m, target));
    ++flips;
  }
  return log;
}

template <class Metric>
std::vector<std::vector<int>> decomposition_impl(const Metric& m,
                                                 std::vector<EdgeStatus>* status_out) {
  const auto& tri = m.tri;
  std::vector<EdgeStatus> status(tri.n_edges());
  for (int e = 0; e < tri.n_edges(); ++e) {
    status[e] = edge_status(m, e);
    require(status[e] != EdgeStatus::Violated, errc::domain_error,
            "decomposition requires a Delaunay metric");
  }
  std::vector<int> parent(tri.n_faces());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int f) {
    while (parent[f] != f) f = parent[f] = parent[parent[f]];
    return f;
  };
  for (int e = 0; e < tri.n_edges(); ++e) {
    if (status[e] != EdgeStatus::Flat) continue;
    const int a = find(tri.face_of(tri.half(e, 0))), b = find(tri.face_of(tri.half(e, 1)));
    if (a != b) parent[a] = b;
  }
  std::vector<std::vector<int>> groups(tri.n_faces());
  for (int f = 0; f < tri.n_faces(); ++f) groups[find(f)].push_back(f);
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  std::sort(groups.begin(), groups.end());
  if (status_out) *status_out = status;
  return groups;
}

// Coplanarity of each group: develop the group's faces from its first face
// and check every lifted vertex against the root plane.
template <class Metric>
void check_group_planes(const Metric& m, const std::vector<std::vector<int>>& groups,
                        double (*to_lambda)(const Metric&, int)) {
  const auto& tri = m.tri;
  for (const auto& group : groups) {
    if (group.size() == 1) continue;
    std::vector<char> in_group(tri.n_faces(), 0);
    for (int f : group) in_group[f] = 1;
    std::vector<std::array<LightPoint, 3>> lift(tri.n_faces());
    std::vector<char> placed(tri.n_faces(), 0);
    const int root = group.front();
    {
      const auto hs = tri.face_halfedges(root);
      const auto t = lift_triangle(to_lambda(m, tri.edge_of(hs[0])),
                                   to_lambda(m, tri.edge_of(hs[2])),
                                   to_lambda(m, tri.edge_of(hs[1])));
      lift[root] = {t[0], t[1], t[2]};  // corner s holds the lift of from(hs[s])
    }
    placed[root] = 1;
    const auto corner_index = [&](int h) {
      const auto hs = tri.face_halfedges(tri.face_of(h));
      for (int s = 0; s < 3; ++s)
        if (hs[s] == h) return s;
      fail(errc::domain_error, "halfedge not in its face");
    };
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (int h : tri.face_halfedges(f)) {
        const int g = tri.face_of(tri.opp(h));
        if (!in_group[g] || placed[g]) continue;
        const int o = tri.opp(h);
        const int sh = corner_index(h), so = corner_index(o);
        const LightPoint a = lift[f][sh], b = lift[f][(sh + 1) % 3];
        const LightPoint apex = lift[f][(sh + 2) % 3];
        const LightPoint w =
            complete_quad(a, b, apex, to_lambda(m, tri.edge_of(tri.prev(o))),
                          to_lambda(m, tri.edge_of(tri.next(o))));
        lift[g][so] = b;
        lift[g][(so + 1) % 3] = a;
        lift[g][(so + 2) % 3] = w;
        placed[g] = 1;
        stack.push_back(g);
      }
    }
    const auto plane = plane_center(lift[root][0], lift[root][1], lift[root][2]);
    require(plane.has_value(), errc::not_elliptic, "decomposition face is not cyclic");
    const Vec3 v = plane->support();
    for (int f : group) {
      require(placed[f], errc::domain_error, "decomposition group is not edge-connected");
      for (int s = 0; s < 3; ++s)
        require(std::abs(mdot(lift[f][s].v, v) + 1.0) <= 1e-6, errc::not_elliptic,
                "decomposition face does not share the group plane");
    }
  }
}

} // namespace

QuadLambdas quad_lambdas(const ConeMetric& m, int e) {
  return quad_lambdas_impl(m, e, &cone_edge_lambda);
}
QuadLambdas quad_lambdas(const DecoratedMetric& m, int e) {
  return quad_lambdas_impl(m, e, &dec_edge_lambda);
}

std::vector<double> cone_angles(const ConeMetric& m) {
  std::vector<double> theta(m.tri.n_vertices(), 0.0);
  for (int f = 0; f < m.tri.n_faces(); ++f) {
    const auto hs = m.tri.face_halfedges(f);
    const double l0 = m.length[m.tri.edge_of(hs[0])];
    const double l1 = m.length[m.tri.edge_of(hs[1])];
    const double l2 = m.length[m.tri.edge_of(hs[2])];
    require_valid(TriangleLengths{m.K, l1, l2, l0});
    theta[m.tri.vertex_from(hs[0])] += angle_opposite(l1, l0, l2, m.K);
    theta[m.tri.vertex_from(hs[1])] += angle_opposite(l2, l1, l0, m.K);
    theta[m.tri.vertex_from(hs[2])] += angle_opposite(l0, l2, l1, m.K);
  }
  return theta;
}

std::vector<double> singular_curvature(const ConeMetric& m) {
  std::vector<double> kappa = cone_angles(m);
  for (double& k : kappa) k = 2.0 * M_PI - k;
  return kappa;
}

double total_area(const ConeMetric& m) {
  double area = 0.0;
  for (int f = 0; f < m.tri.n_faces(); ++f) area += triangle_area(face_lengths(m, f));
  return area;
}

double gauss_bonnet_residual(const ConeMetric& m) {
  const auto kappa = singular_curvature(m);
  const double sum = std::accumulate(kappa.begin(), kappa.end(), 0.0);
  return sum + geometry_sign(m.K) * total_area(m) - 2.0 * M_PI * (2 - 2 * m.tri.genus());
}

EdgeStatus edge_status(const ConeMetric& m, int e) { return edge_status_impl(m, e, false); }
EdgeStatus edge_status(const DecoratedMetric& m, int e) { return edge_status_impl(m, e, false); }
EdgeStatus edge_status_loose(const ConeMetric& m, int e) { return edge_status_impl(m, e, true); }
EdgeStatus edge_status_loose(const DecoratedMetric& m, int e) {
  return edge_status_impl(m, e, true);
}

FlipRecord flip(DecoratedMetric& m, int e) {
  const QuadLift lift = lift_quad(quad_lambdas(m, e));
  const double new_lambda = lambda_of(lift.y, lift.w);
  const FlipRecord rec = m.tri.flip(e);
  m.lambda[e] = new_lambda;
  return rec;
}

FlipRecord flip(ConeMetric& m, int e) {
  const auto& tri = m.tri;
  const int h = tri.half(e, 0), o = tri.half(e, 1);
  require(tri.face_of(h) != tri.face_of(o), errc::flip_not_embeddable,
          "cannot flip the inner edge of a self-folded triangle");
  const double le = m.length[e];
  const double zy = m.length[tri.edge_of(tri.next(h))];
  const double yx = m.length[tri.edge_of(tri.prev(h))];
  const double xw = m.length[tri.edge_of(tri.next(o))];
  const double wz = m.length[tri.edge_of(tri.prev(o))];
  // Angle sums at the two diagonal endpoints decide embeddability of the quad.
  const double at_x = angle_opposite(zy, le, yx, m.K) + angle_opposite(wz, le, xw, m.K);
  const double at_z = angle_opposite(yx, le, zy, m.K) + angle_opposite(xw, le, wz, m.K);
  require(at_x < M_PI && at_z < M_PI, errc::flip_not_embeddable,
          "quad develops concave; flip diagonal falls outside");
  const double new_len = side_from_angle(yx, xw, at_x, m.K);
  if (m.K == Geometry::spherical)
    require(new_len < M_PI, errc::flip_not_embeddable, "flipped spherical edge reaches pi");
  const FlipRecord rec = m.tri.flip(e);
  m.length[e] = new_len;
  return rec;
}

DelaunayLog make_delaunay(DecoratedMetric& m) { return make_delaunay_impl(m); }
DelaunayLog make_delaunay(ConeMetric& m) { return make_delaunay_impl(m); }

bool is_delaunay(const ConeMetric& m) {
  for (int e = 0; e < m.tri.n_edges(); ++e)
    if (edge_status_loose(m, e) == EdgeStatus::Violated) return false;
  return true;
}
bool is_delaunay(const DecoratedMetric& m) {
  for (int e = 0; e < m.tri.n_edges(); ++e)
    if (edge_status_loose(m, e) == EdgeStatus::Violated) return false;
  return true;
}

std::vector<std::vector<int>> delaunay_decomposition(const ConeMetric& m) {
  auto groups = decomposition_impl(m, nullptr);
  check_group_planes(m, groups, &cone_edge_lambda);
  return groups;
}
std::vector<std::vector<int>> delaunay_decomposition(const DecoratedMetric& m) {
  auto groups = decomposition_impl(m, nullptr);
  check_group_planes(m, groups, &dec_edge_lambda);
  return groups;
}

std::vector<std::vector<int>> decomposition_boundaries(const MarkedTriangulation& tri,
                                                       const std::vector<std::vector<int>>& groups,
                                                       const std::vector<EdgeStatus>& status) {
  std::vector<int> group_of(tri.n_faces(), -1);
  for (int g = 0; g < static_cast<int>(groups.size()); ++g)
    for (int f : groups[g]) group_of[f] = g;
  const auto interior = [&](int h) {
    return status[tri.edge_of(h)] == EdgeStatus::Flat &&
           group_of[tri.face_of(h)] == group_of[tri.face_of(tri.opp(h))];
  };
  std::vector<std::vector<int>> cycles(groups.size());
  for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
    int start = -1;
    for (int f : groups[g]) {
      for (int h : tri.face_halfedges(f))
        if (!interior(h)) {
          start = h;
          break;
        }
      if (start >= 0) break;
    }
    if (start < 0) continue;  // closed group (e.g. a doubled polygon)
    int h = start;
    do {
      cycles[g].push_back(h);
      int n = tri.next(h);
      while (interior(n)) n = tri.next(tri.opp(n));
      h = n;
    } while (h != start && cycles[g].size() <= 4 * static_cast<size_t>(tri.n_halfedges()));
    require(h == start, errc::domain_error, "decomposition boundary walk did not close");
  }
  return cycles;
}

} // namespace lcs
