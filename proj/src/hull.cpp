#include "lcs/hull.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lcs {

namespace {

struct TriFace {
  int a, b, c;
  Vec3 normal;  // outward unit normal
  double offset; // normal . x on the face plane
  bool alive = true;
};

double scale_of(const std::vector<Vec3>& pts) {
  double s = 0.0;
  for (const Vec3& p : pts) s = std::max(s, p.cwiseAbs().maxCoeff());
  return std::max(s, 1.0);
}

// 2D convex hull (monotone chain) of points projected into the face plane.
std::vector<int> planar_hull_order(const std::vector<Vec3>& pts, const std::vector<int>& ids,
                                   const Vec3& normal) {
  Vec3 u = normal.cross(Vec3(1, 0, 0));
  if (u.norm() < 1e-6) u = normal.cross(Vec3(0, 1, 0));
  u.normalize();
  const Vec3 v = normal.cross(u);
  struct P2 {
    double x, y;
    int id;
  };
  std::vector<P2> pl;
  pl.reserve(ids.size());
  for (int id : ids) pl.push_back({u.dot(pts[id]), v.dot(pts[id]), id});
  std::sort(pl.begin(), pl.end(), [](const P2& a, const P2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  const auto cross = [](const P2& o, const P2& a, const P2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<P2> hull(2 * pl.size());
  size_t k = 0;
  for (size_t i = 0; i < pl.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pl[i]) <= 0) --k;
    hull[k++] = pl[i];
  }
  for (size_t i = pl.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pl[i]) <= 0) --k;
    hull[k++] = pl[i];
  }
  hull.resize(k > 1 ? k - 1 : k);
  std::vector<int> order;
  order.reserve(hull.size());
  for (const P2& p : hull) order.push_back(p.id);
  return order;
}

} // namespace

Hull convex_hull_3d(const std::vector<Vec3>& pts) {
  const int n = static_cast<int>(pts.size());
  require(n >= 4, errc::degenerate_input, "hull needs at least four points");
  const double scale = scale_of(pts);
  const double eps = 1e-9 * scale;

  // Seed tetrahedron of nondegenerate volume.
  int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
  double best = -1.0;
  for (int i = 1; i < n; ++i) {
    const double d = (pts[i] - pts[i0]).norm();
    if (d > best) best = d, i1 = i;
  }
  require(best > eps, errc::degenerate_input, "all points coincide");
  best = -1.0;
  for (int i = 0; i < n; ++i) {
    const double d = (pts[i] - pts[i0]).cross(pts[i1] - pts[i0]).norm();
    if (d > best) best = d, i2 = i;
  }
  require(best > eps * eps, errc::degenerate_input, "points are collinear");
  const Vec3 nrm = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]).normalized();
  best = -1.0;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(nrm.dot(pts[i] - pts[i0]));
    if (d > best) best = d, i3 = i;
  }
  require(best > eps, errc::degenerate_input, "points are coplanar");

  const Vec3 interior = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
  std::vector<TriFace> faces;
  const auto push_face = [&](int a, int b, int c) {
    TriFace f{a, b, c, Vec3::Zero(), 0.0, true};
    f.normal = (pts[b] - pts[a]).cross(pts[c] - pts[a]);
    const double nn = f.normal.norm();
    require(nn > 0.0, errc::degenerate_input, "degenerate hull face");
    f.normal /= nn;
    if (f.normal.dot(interior - pts[a]) > 0) {
      std::swap(f.b, f.c);
      f.normal = -f.normal;
    }
    f.offset = f.normal.dot(pts[f.a]);
    faces.push_back(f);
  };
  push_face(i0, i1, i2);
  push_face(i0, i1, i3);
  push_face(i0, i2, i3);
  push_face(i1, i2, i3);

  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (i != i0 && i != i1 && i != i2 && i != i3) rest.push_back(i);

  for (int p : rest) {
    // Faces visible from p.
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
      if (faces[f].alive && faces[f].normal.dot(pts[p]) - faces[f].offset > eps)
        visible.push_back(f);
    if (visible.empty()) continue;
    // Horizon = directed edges of visible faces whose reversal is not visible.
    std::vector<std::array<int, 2>> edges;
    for (int f : visible) {
      const auto& t = faces[f];
      edges.push_back({t.a, t.b});
      edges.push_back({t.b, t.c});
      edges.push_back({t.c, t.a});
      faces[f].alive = false;
    }
    std::vector<std::array<int, 2>> horizon;
    for (const auto& e : edges) {
      const std::array<int, 2> rev = {e[1], e[0]};
      if (std::find(edges.begin(), edges.end(), rev) == edges.end()) horizon.push_back(e);
    }
    for (const auto& e : horizon) push_face(e[0], e[1], p);
  }

  // Merge coplanar adjacent faces.
  std::vector<int> alive;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    if (faces[f].alive) alive.push_back(f);
  std::vector<int> parent(alive.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < alive.size(); ++i)
    for (size_t j = i + 1; j < alive.size(); ++j) {
      const auto& fi = faces[alive[i]];
      const auto& fj = faces[alive[j]];
      if ((fi.normal - fj.normal).cwiseAbs().maxCoeff() <= 1e-9 &&
          std::abs(fi.offset - fj.offset) <= 1e-9 * scale) {
        const int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
        if (a != b) parent[a] = b;
      }
    }

  Hull hull;
  hull.points = pts;
  std::vector<std::vector<int>> members(alive.size());
  for (size_t i = 0; i < alive.size(); ++i) members[find(static_cast<int>(i))].push_back(alive[i]);
  for (const auto& group : members) {
    if (group.empty()) continue;
    std::vector<int> verts;
    for (int f : group) {
      verts.push_back(faces[f].a);
      verts.push_back(faces[f].b);
      verts.push_back(faces[f].c);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const Vec3 normal = faces[group.front()].normal;
    std::vector<int> ordered =
        verts.size() > 3 ? planar_hull_order(pts, verts, normal) : verts;
    if (ordered.size() == 3) {
      // Keep outward orientation for bare triangles.
      const Vec3 nn = (pts[ordered[1]] - pts[ordered[0]]).cross(pts[ordered[2]] - pts[ordered[0]]);
      if (nn.dot(normal) < 0) std::swap(ordered[1], ordered[2]);
    }
    hull.faces.push_back(ordered);
    hull.face_normals.push_back(normal);
  }
  return hull;
}

EpsteinPennerResult epstein_penner_faces(const DecoratedMetric& d, int depth) {
  require(depth >= 3, errc::domain_error, "orbit depth must be at least 3");
  const Development dev = develop(d);
  const std::vector<Mat3> gens = dev_generators(dev, d.tri);
  const std::vector<Vec3> seeds = decoration_seeds(dev, d.tri);
  const std::vector<Vec3> pts = orbit(seeds, gens, depth);
  const std::vector<Vec3> deeper = orbit(seeds, gens, depth + 2);
  const Hull hull = convex_hull_3d(pts);

  EpsteinPennerResult result;
  result.orbit_size = static_cast<int>(pts.size());

  struct Candidate {
    std::vector<Vec3> verts;
    Vec3 support;
    double rho_hat;
  };
  std::vector<Candidate> validated;
  for (const auto& face : hull.faces) {
    const auto plane = plane_center(LightPoint(hull.points[face[0]]),
                                    LightPoint(hull.points[face[1]]),
                                    LightPoint(hull.points[face[2]]));
    if (!plane.has_value()) continue;
    ++result.candidate_faces;
    const Vec3 v = plane->support();
    bool ok = true;
    for (const Vec3& p : deeper)
      if (mdot(p, v) > -1.0 + 1e-7) {
        ok = false;
        break;
      }
    if (!ok) {
      ++result.unvalidated_faces;
      continue;
    }
    ++result.validated_faces;
    Candidate c;
    for (int id : face) c.verts.push_back(hull.points[id]);
    c.support = v;
    c.rho_hat = plane->rho_hat;
    validated.push_back(std::move(c));
  }
  require(!validated.empty(), errc::insufficient_depth,
          "no hull face validated; increase the orbit depth");

  // Quotient by the holonomy group: faces related by a group element of
  // bounded word length are identified.
  const std::vector<Mat3> words = group_elements(gens, depth + 2);
  const auto key = [](const std::vector<Vec3>& verts) {
    std::vector<Vec3> s = verts;
    std::sort(s.begin(), s.end(), [](const Vec3& a, const Vec3& b) {
      return a[2] < b[2] || (a[2] == b[2] && (a[0] < b[0] || (a[0] == b[0] && a[1] < b[1])));
    });
    return s;
  };
  const auto same_set = [](const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
      const double tolv = 1e-6 * std::max(1.0, a[i].cwiseAbs().maxCoeff());
      if ((a[i] - b[i]).cwiseAbs().maxCoeff() > tolv) return false;
    }
    return true;
  };
  std::vector<std::vector<Vec3>> keys;
  keys.reserve(validated.size());
  for (const auto& c : validated) keys.push_back(key(c.verts));
  std::vector<int> rep(validated.size(), -1);
  for (size_t i = 0; i < validated.size(); ++i) {
    if (rep[i] != -1) continue;
    rep[i] = static_cast<int>(i);
    for (size_t j = i + 1; j < validated.size(); ++j) {
      if (rep[j] != -1) continue;
      bool related = false;
      for (const Mat3& g : words) {
        std::vector<Vec3> moved;
        moved.reserve(validated[i].verts.size());
        for (const Vec3& p : validated[i].verts) moved.push_back(g * p);
        if (same_set(key(moved), keys[j])) {
          related = true;
          break;
        }
      }
      if (related) rep[j] = static_cast<int>(i);
    }
  }
  for (size_t i = 0; i < validated.size(); ++i) {
    if (rep[i] != static_cast<int>(i)) continue;
    EpsteinPennerFace face;
    face.vertices = validated[i].verts;
    face.support = validated[i].support;
    face.rho_hat = validated[i].rho_hat;
    const size_t m = face.vertices.size();
    for (size_t k = 0; k < m; ++k)
      face.edge_lambdas.push_back(
          lambda_of(LightPoint(face.vertices[k]), LightPoint(face.vertices[(k + 1) % m])));
    result.quotient_faces.push_back(std::move(face));
  }
  return result;
}

std::string export_mesh(const std::vector<EpsteinPennerFace>& faces, Chart chart, double ray_cap) {
  std::ostringstream out;
  out << "# epstein-penner hull faces";
  out << (chart == Chart::cylinder ? " (cylinder chart)\n" : " (minkowski chart)\n");
  std::vector<Vec3> verts;
  const auto vertex_id = [&](const Vec3& p) {
    for (size_t i = 0; i < verts.size(); ++i)
      if ((verts[i] - p).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, p.cwiseAbs().maxCoeff()))
        return static_cast<int>(i);
    verts.push_back(p);
    return static_cast<int>(verts.size() - 1);
  };
  std::vector<std::vector<int>> face_ids;
  std::vector<std::array<int, 2>> rays;
  for (const auto& face : faces) {
    std::vector<int> ids;
    for (const Vec3& p : face.vertices) {
      const int id = vertex_id(p);
      ids.push_back(id);
      if (ray_cap > p[2]) {
        const int tip = vertex_id((ray_cap / p[2]) * p);
        rays.push_back({id, tip});
      }
    }
    face_ids.push_back(ids);
  }
  char buf[128];
  for (const Vec3& p : verts) {
    const Vec3 q = chart == Chart::cylinder ? chart_involution(p) : p;
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", q[0], q[1], q[2]);
    out << buf;
  }
  for (const auto& ids : face_ids) {
    out << "f";
    for (int id : ids) out << ' ' << id + 1;
    out << '\n';
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  for (const auto& r : rays) out << "l " << r[0] + 1 << ' ' << r[1] + 1 << '\n';
  return out.str();
}

} // namespace lcs
