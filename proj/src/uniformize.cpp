#include "lcs/uniformize.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace lcs {

namespace {

struct Evaluator {
  const ConeMetric& base;
  std::vector<double> kappa_target;
  long flips = 0;

  Eigen::VectorXd residual(const Eigen::VectorXd& u) {
    DecoratedMetric dec = cone_to_decorated(base);
    std::vector<double> uv(u.data(), u.data() + u.size());
    dec = vertex_scale_decorated(dec, uv);
    flips += static_cast<long>(make_delaunay(dec).flips.size());
    const ConeMetric scaled = decorated_to_cone(dec, base.K);
    const std::vector<double> kappa = singular_curvature(scaled);
    Eigen::VectorXd r(kappa.size());
    for (size_t i = 0; i < kappa.size(); ++i) r[i] = kappa[i] - kappa_target[i];
    return r;
  }

  ConeMetric metric_at(const Eigen::VectorXd& u) {
    std::vector<double> uv(u.data(), u.data() + u.size());
    return vertex_scale_cone(base, uv);
  }
};

} // namespace

UniformizeResult uniformize(const ConeMetric& m, const std::vector<double>& kappa_target,
                            const UniformizeOptions& opts) {
  validate(m);
  require(m.K != Geometry::spherical, errc::domain_error,
          "spherical uniformization is out of scope");
  const int n = m.tri.n_vertices();
  require(static_cast<int>(kappa_target.size()) == n, errc::domain_error,
          "one target curvature per marked vertex required");
  for (double k : kappa_target)
    require(k < 2.0 * M_PI, errc::incompatible_curvature, "target curvature must be < 2 pi");
  const double gb = 2.0 * M_PI * (2 - 2 * m.tri.genus());
  const double total = std::accumulate(kappa_target.begin(), kappa_target.end(), 0.0);
  if (m.K == Geometry::hyperbolic)
    require(total > gb + 1e-12, errc::incompatible_curvature,
            "hyperbolic targets need sum kappa > 2 pi (2-2g)");
  else
    require(std::abs(total - gb) <= 1e-9, errc::incompatible_curvature,
            "Euclidean targets need sum kappa = 2 pi (2-2g)");

  Evaluator eval{m, kappa_target, 0};
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  if (!opts.u0.empty()) {
    require(static_cast<int>(opts.u0.size()) == n, errc::domain_error, "u0 has wrong size");
    for (int i = 0; i < n; ++i) u[i] = opts.u0[i];
  }

  UniformizeResult result;
  Eigen::VectorXd r = eval.residual(u);
  double rnorm = r.cwiseAbs().maxCoeff();
  result.residual_history.push_back(rnorm);

  for (int iter = 0; iter < opts.max_iter && rnorm >= opts.tol; ++iter) {
    const long flips_before = eval.flips;
    Eigen::MatrixXd jac(n, n);
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd up = u, um = u;
      up[i] += opts.fd_step;
      um[i] -= opts.fd_step;
      jac.col(i) = (eval.residual(up) - eval.residual(um)) / (2.0 * opts.fd_step);
    }
    Eigen::VectorXd step;
    if (m.K == Geometry::hyperbolic) {
      step = jac.partialPivLu().solve(-r);
    } else {
      // Dilation kernel: take the minimum-norm step and keep sum(u) fixed.
      step = jac.completeOrthogonalDecomposition().solve(-r);
      step.array() -= step.mean();
    }
    double t = 1.0;
    Eigen::VectorXd best_u = u, best_r = r;
    double best_norm2 = r.squaredNorm();
    bool accepted = false;
    for (int halving = 0; halving <= 30; ++halving) {
      const Eigen::VectorXd cand = u + t * step;
      const Eigen::VectorXd rc = eval.residual(cand);
      if (rc.squaredNorm() < (1.0 - 1e-4 * t) * best_norm2) {
        best_u = cand;
        best_r = rc;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;  // stalled; reported below if not converged
    u = best_u;
    r = best_r;
    rnorm = r.cwiseAbs().maxCoeff();
    result.residual_history.push_back(rnorm);
    result.flips_per_iteration.push_back(static_cast<int>(eval.flips - flips_before));
    ++result.iterations;
  }

  if (rnorm >= opts.tol) {
    std::ostringstream msg;
    msg << "no convergence after " << result.iterations << " iterations; residuals:";
    for (double h : result.residual_history) msg << ' ' << h;
    fail(errc::no_convergence, msg.str());
  }

  result.u.assign(u.data(), u.data() + n);
  result.metric = eval.metric_at(u);
  return result;
}

} // namespace lcs
