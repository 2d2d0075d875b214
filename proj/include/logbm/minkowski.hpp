#ifndef LOGBM_MINKOWSKI_HPP
#define LOGBM_MINKOWSKI_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "logbm/measure.hpp"
#include "logbm/polytope.hpp"

namespace logbm {

struct SolverOptions {
  double tol = 1e-8;       // max relative facet-area error at convergence
  int max_iter = 10000;
  double barrier = 1e-10;  // coefficient of sum(-log h_i); breaks stalls
  bool use_newton = true;  // false: projected gradient with Armijo only
  /// Starting log-supports; empty = the isotropic start (all h_i = 1).
  Eigen::VectorXd initial_log_supports;
};

struct MinkowskiSolution {
  SymmetricPolytope body;
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
  std::string method;  // "newton" or "gradient" (which produced the result)
};

/// Solves the discrete even Minkowski problem: finds the origin-symmetric
/// polytope whose surface area measure equals `target`. Existence and
/// uniqueness hold for even spanning measures; this routine verifies its own
/// residual rather than relying on either.
///
/// The scheme is variational: minimize the scale-invariant functional
///   phi(y) = log( sum_i alpha_i h_i ) - (1/n) log V(wulff(h)),  h = exp(y),
/// whose critical points have facet areas proportional to alpha, then
/// rescale so the areas match absolutely. Damped Newton steps (the volume
/// Hessian comes from ridge data) with backtracking line search, falling
/// back to plain gradient steps whenever the Newton direction fails to
/// descend.
///
/// Throws NonSpanning when the support does not span R^n. On iteration
/// exhaustion returns the best iterate with converged == false.
MinkowskiSolution solve_even_minkowski(const EvenDiscreteMeasure& target,
                                       const SolverOptions& opts = {});

/// Internal state of the variational objective at given log-supports,
/// exposed for testing (gradient checks, descent monitoring).
struct ObjectiveState {
  double value = 0.0;            // phi(y)
  Eigen::VectorXd gradient;      // d phi / d y
  Eigen::VectorXd areas;         // facet area per canonical target direction
  Eigen::VectorXd volume_gradient;  // dV/dh_i for the antipodal pair = 2 F_i
  double volume = 0.0;
  double residual = 0.0;         // max_i |c^{n-1} F_i - alpha_i| / alpha_i
};

ObjectiveState evaluate_minkowski_objective(const EvenDiscreteMeasure& target,
                                            const Eigen::VectorXd& log_supports,
                                            double barrier = 1e-10);

/// dArea_i/dh_j for antipodal pair moves, from ridge data (the Hessian of
/// volume up to the factor 2). Exposed for the Euler-homogeneity test.
Eigen::MatrixXd area_jacobian(const SymmetricPolytope& body);

}  // namespace logbm

#endif  // LOGBM_MINKOWSKI_HPP
