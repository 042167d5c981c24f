#ifndef LCS_UNIFORMIZE_HPP
#define LCS_UNIFORMIZE_HPP

#include "lcs/correspondence.hpp"

namespace lcs {

struct UniformizeOptions {
  int max_iter = 200;
  double tol = 1e-8;       // infinity norm of the curvature residual
  double fd_step = 1e-6;   // central-difference step for the Jacobian
  std::vector<double> u0;  // start (default all zero)
};

struct UniformizeResult {
  std::vector<double> u;
  ConeMetric metric;
  int iterations = 0;
  std::vector<double> residual_history;  // infinity norms, one per iteration
  std::vector<int> flips_per_iteration;  // Delaunay flips inside the evaluations
};

// Damped Newton on kappa(vertex_scale_cone(m, u)) - kappa_target for
// K in {-1, 0}. K=0 keeps the dilation gauge sum(u) = sum(u0).
// Throws incompatible_curvature when Gauss-Bonnet rules the target out and
// no_convergence when max_iter damped steps do not reach tol.
UniformizeResult uniformize(const ConeMetric& m, const std::vector<double>& kappa_target,
                            const UniformizeOptions& opts = {});

} // namespace lcs

#endif
