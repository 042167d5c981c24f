#include "lcs/correspondence.hpp"

#include <cmath>

namespace lcs {

namespace {

// rho_hat of every face of a decorated metric (expected Delaunay).
std::vector<double> face_rho_hats(const DecoratedMetric& d) {
  std::vector<double> rho(d.tri.n_faces());
  for (int f = 0; f < d.tri.n_faces(); ++f) {
    const auto hs = d.tri.face_halfedges(f);
    const auto t = lift_triangle(d.lambda[d.tri.edge_of(hs[0])], d.lambda[d.tri.edge_of(hs[2])],
                                 d.lambda[d.tri.edge_of(hs[1])]);
    const auto plane = plane_center(t[0], t[1], t[2]);
    require(plane.has_value(), errc::not_elliptic, "Delaunay face lift is not cyclic");
    rho[f] = plane->rho_hat;
  }
  return rho;
}

} // namespace

ConeMetric decorated_to_cone(const DecoratedMetric& d, Geometry K) {
  validate(d);
  DecoratedMetric del = d;
  make_delaunay(del);
  if (K == Geometry::spherical) {
    const auto rho = face_rho_hats(del);
    for (double r : rho)
      require(r < 1.0 - tol::tstar, errc::not_in_tstar,
              "hull does not contain the hyperboloid (face rho_hat >= 1)");
  }
  ConeMetric out;
  out.tri = del.tri;
  out.K = K;
  out.length.resize(del.lambda.size());
  for (size_t e = 0; e < del.lambda.size(); ++e)
    out.length[e] = length_from_lambda(del.lambda[e], K);
  validate(out);
  return out;
}

DecoratedMetric cone_to_decorated(const ConeMetric& m, bool bps_convention) {
  validate(m);
  require(!bps_convention || m.K == Geometry::euclidean, errc::domain_error,
          "the bps convention only applies to Euclidean metrics");
  ConeMetric del = m;
  make_delaunay(del);
  DecoratedMetric out;
  out.tri = del.tri;
  out.lambda.resize(del.length.size());
  for (size_t e = 0; e < del.length.size(); ++e)
    out.lambda[e] =
        bps_convention ? del.length[e] : lambda_from_length(del.length[e], del.K);
  return out;
}

TStarReport tstar_membership(const DecoratedMetric& d) {
  validate(d);
  TStarReport report;
  report.delaunay = d;
  make_delaunay(report.delaunay);
  report.face_rho_hat = face_rho_hats(report.delaunay);
  report.max_rho_hat = 0.0;
  for (double r : report.face_rho_hat) report.max_rho_hat = std::max(report.max_rho_hat, r);
  report.member = report.max_rho_hat < 1.0 - tol::tstar;
  report.boundary = std::abs(report.max_rho_hat - 1.0) <= tol::tstar;
  return report;
}

DecoratedMetric vertex_scale_decorated(const DecoratedMetric& d, const std::vector<double>& u) {
  validate(d);
  require(static_cast<int>(u.size()) == d.tri.n_vertices(), errc::domain_error,
          "one scale factor per marked vertex required");
  DecoratedMetric out = d;
  for (int e = 0; e < d.tri.n_edges(); ++e) {
    const int h = d.tri.half(e, 0);
    const int i = d.tri.vertex_from(h), j = d.tri.vertex_to(h);
    out.lambda[e] *= std::exp(0.5 * (u[i] + u[j]));
  }
  return out;
}

ConeMetric vertex_scale_cone(const ConeMetric& m, const std::vector<double>& u) {
  return decorated_to_cone(vertex_scale_decorated(cone_to_decorated(m), u), m.K);
}

std::optional<std::vector<double>> same_fiber_test(const DecoratedMetric& a,
                                                   const DecoratedMetric& b) {
  require(a.tri.same_combinatorics(b.tri), errc::combinatorics_mismatch,
          "fiber test requires identical combinatorics");
  const auto ca = a.tri.canonical(), cb = b.tri.canonical();
  const int n = a.tri.n_vertices();
  const int ne = a.tri.n_edges();
  Eigen::MatrixXd incidence = Eigen::MatrixXd::Zero(ne, n);
  Eigen::VectorXd rhs(ne);
  for (int r = 0; r < ne; ++r) {
    const auto& row = ca.gluing[r];
    const int i = ca.face_vertices[row[0]][row[1]];
    const int j = ca.face_vertices[row[0]][(row[1] + 1) % 3];
    incidence(r, i) += 1.0;
    incidence(r, j) += 1.0;
    rhs[r] = 2.0 * std::log(b.lambda[cb.edge_of_row[r]] / a.lambda[ca.edge_of_row[r]]);
  }
  const Eigen::VectorXd u = incidence.completeOrthogonalDecomposition().solve(rhs);
  const double residual = (incidence * u - rhs).cwiseAbs().maxCoeff();
  if (residual >= 1e-8) return std::nullopt;
  return std::vector<double>(u.data(), u.data() + n);
}

bool discretely_conformal_test(const ConeMetric& a, const ConeMetric& b) {
  require(a.K == b.K, errc::domain_error, "metrics live in different curvature spaces");
  ConeMetric ma = a, mb = b;
  if (a.K == Geometry::euclidean) {
    // Dilation gauge: compare at unit total area.
    const double sa = 1.0 / std::sqrt(total_area(ma)), sb = 1.0 / std::sqrt(total_area(mb));
    for (double& l : ma.length) l *= sa;
    for (double& l : mb.length) l *= sb;
  }
  const DecoratedMetric da = cone_to_decorated(ma), db = cone_to_decorated(mb);
  require(da.tri.same_combinatorics(db.tri), errc::combinatorics_mismatch,
          "Delaunay triangulations could not be identified");
  return same_fiber_test(da, db).has_value();
}

ConeMetric doubled_polygon(Geometry K, const std::vector<double>& sides,
                           const std::vector<double>& fan_diagonals) {
  const int n = static_cast<int>(sides.size());
  require(n >= 3, errc::invalid_polygon, "polygon needs at least 3 sides");
  require(static_cast<int>(fan_diagonals.size()) == n - 3, errc::invalid_polygon,
          "fan triangulation needs n-3 diagonals");
  ConeMetric m;
  m.K = K;
  m.tri = doubled_polygon_complex(n);
  m.length.assign(m.tri.n_edges(), 0.0);
  const int nf = n - 2;
  const auto assign = [&](int h, double v) { m.length[m.tri.edge_of(h)] = v; };
  assign(0, sides[0]);                       // edge (0,1): front face 0, side 0
  assign(3 * (nf - 1) + 2, sides[n - 1]);    // edge (n-1,0): last front face, side 2
  for (int i = 0; i < nf; ++i) assign(3 * i + 1, sides[i + 1]);  // rim (i+1,i+2)
  for (int i = 1; i < nf; ++i) {
    assign(3 * i, fan_diagonals[i - 1]);             // front diagonal (0,i+1)
    assign(3 * (nf + i) + 2, fan_diagonals[i - 1]);  // mirrored diagonal
  }
  try {
    validate(m);
  } catch (const Error& e) {
    fail(errc::invalid_polygon, std::string("sides do not triangulate: ") + e.what());
  }
  return m;
}

} // namespace lcs
