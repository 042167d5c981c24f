#ifndef LCS_TEST_HELPERS_HPP
#define LCS_TEST_HELPERS_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "lcs/correspondence.hpp"
#include "lcs/surface.hpp"

namespace lcs::testing {

class Rng {
public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    const double u = (gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int uniform_int(int lo, int hi) { return lo + static_cast<int>(gen_() % (hi - lo + 1)); }

private:
  std::mt19937_64 gen_;
};

inline Mat3 rotation_z(double angle) {
  Mat3 m = Mat3::Identity();
  m(0, 0) = std::cos(angle);
  m(0, 1) = -std::sin(angle);
  m(1, 0) = std::sin(angle);
  m(1, 1) = std::cos(angle);
  return m;
}

inline Mat3 boost_x(double rapidity) {
  Mat3 m = Mat3::Identity();
  m(0, 0) = std::cosh(rapidity);
  m(0, 2) = std::sinh(rapidity);
  m(2, 0) = std::sinh(rapidity);
  m(2, 2) = std::cosh(rapidity);
  return m;
}

inline Mat3 random_motion(Rng& rng) {
  return rotation_z(rng.uniform(0, 2 * M_PI)) * boost_x(rng.uniform(-1.0, 1.0)) *
         rotation_z(rng.uniform(0, 2 * M_PI));
}

inline LightPoint random_light_point(Rng& rng) {
  const double r = std::exp(rng.uniform(-1.0, 1.0));
  const double phi = rng.uniform(0, 2 * M_PI);
  return LightPoint(Vec3(r * std::cos(phi), r * std::sin(phi), r));
}

// Classical in-circle determinant on developed planar positions: positive
// when d is inside the circle through (a, b, c) in counterclockwise order.
inline double incircle_determinant(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                                   const Eigen::Vector2d& c, const Eigen::Vector2d& d) {
  Eigen::Matrix3d m;
  m << a[0] - d[0], a[1] - d[1], a.squaredNorm() - d.squaredNorm(),
       b[0] - d[0], b[1] - d[1], b.squaredNorm() - d.squaredNorm(),
       c[0] - d[0], c[1] - d[1], c.squaredNorm() - d.squaredNorm();
  return m.determinant();
}

// Flat torus from the lattice spanned by (1,0) and (x,y), faces split along
// the (1,0)+(x,y) diagonal. Edge 0 carries (1,0), edge 1 (x,y), edge 2 the sum.
inline ConeMetric flat_torus(double x, double y) {
  ConeMetric m;
  m.tri = torus_one_vertex();
  m.K = Geometry::euclidean;
  m.length = {1.0, std::hypot(x, y), std::hypot(1.0 + x, y)};
  return m;
}

inline DecoratedMetric decorated_torus(double lam) {
  return DecoratedMetric{torus_one_vertex(), {lam, lam, lam}};
}

inline DecoratedMetric random_decorated(const MarkedTriangulation& tri, Rng& rng, double lo = 0.5,
                                        double hi = 2.0) {
  DecoratedMetric d;
  d.tri = tri;
  d.lambda.resize(tri.n_edges());
  for (double& l : d.lambda) l = rng.uniform(lo, hi);
  return d;
}

// Uniformly shrink the decoration until the hull strictly contains the
// hyperboloid (rho_hat <= margin on all Delaunay faces).
inline DecoratedMetric shrink_into_tstar(DecoratedMetric d, double margin = 0.9) {
  for (int tries = 0; tries < 60; ++tries) {
    const TStarReport report = tstar_membership(d);
    if (report.member && report.max_rho_hat <= margin) return d;
    const double s = margin / report.max_rho_hat;
    for (double& l : d.lambda) l *= std::min(0.9, s);
  }
  fail(errc::not_in_tstar, "could not shrink decoration into T*");
}

// Equality of marked metrics up to face relabeling: per-edge values and
// endpoint labels, and the face set as sorted edge-id triples.
inline bool same_marked_metric_impl(const MarkedTriangulation& ta, const std::vector<double>& va,
                                    const MarkedTriangulation& tb, const std::vector<double>& vb,
                                    double eps) {
  if (ta.n_edges() != tb.n_edges() || ta.n_faces() != tb.n_faces()) return false;
  for (int e = 0; e < ta.n_edges(); ++e) {
    if (std::abs(va[e] - vb[e]) > eps * std::max(1.0, std::abs(va[e]))) return false;
    const int ha = ta.half(e, 0), hb = tb.half(e, 0);
    const auto ends_a = std::minmax(ta.vertex_from(ha), ta.vertex_to(ha));
    const auto ends_b = std::minmax(tb.vertex_from(hb), tb.vertex_to(hb));
    if (ends_a != ends_b) return false;
  }
  auto face_set = [](const MarkedTriangulation& t) {
    std::vector<std::array<int, 3>> out;
    for (int f = 0; f < t.n_faces(); ++f) {
      const auto hs = t.face_halfedges(f);
      std::array<int, 3> tri = {t.edge_of(hs[0]), t.edge_of(hs[1]), t.edge_of(hs[2])};
      std::sort(tri.begin(), tri.end());
      out.push_back(tri);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return face_set(ta) == face_set(tb);
}

inline bool same_marked_metric(const DecoratedMetric& a, const DecoratedMetric& b,
                               double eps = 1e-12) {
  return same_marked_metric_impl(a.tri, a.lambda, b.tri, b.lambda, eps);
}
inline bool same_marked_metric(const ConeMetric& a, const ConeMetric& b, double eps = 1e-12) {
  return a.K == b.K && same_marked_metric_impl(a.tri, a.length, b.tri, b.length, eps);
}

// Two-vertex flat torus on the 2x1 square grid (four faces, six edges).
inline ConeMetric flat_torus_two_vertices() {
  const std::vector<std::array<int, 3>> faces = {
      {0, 1, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}};
  const std::vector<std::array<int, 4>> gluing = {{0, 0, 1, 1}, {2, 0, 3, 1}, {1, 2, 2, 1},
                                                  {0, 1, 3, 2}, {0, 2, 1, 0}, {2, 2, 3, 0}};
  ConeMetric m;
  m.tri = MarkedTriangulation(2, faces, gluing);
  m.K = Geometry::euclidean;
  m.length.assign(6, 0.0);
  const double diag = std::sqrt(2.0);
  // bottoms, tops, verticals are unit; the two diagonals are sqrt(2)
  m.length[m.tri.edge_of(0)] = 1.0;      // bottom of square 1
  m.length[m.tri.edge_of(6)] = 1.0;      // bottom of square 2
  m.length[m.tri.edge_of(5)] = 1.0;      // left/right seam
  m.length[m.tri.edge_of(1)] = 1.0;      // middle vertical
  m.length[m.tri.edge_of(2)] = diag;     // diagonal 1
  m.length[m.tri.edge_of(8)] = diag;     // diagonal 2
  return m;
}

} // namespace lcs::testing

#endif
