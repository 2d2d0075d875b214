#ifndef LOGBM_COMBINATIONS_HPP
#define LOGBM_COMBINATIONS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "logbm/minkowski.hpp"
#include "logbm/polytope.hpp"

namespace logbm {

/// The interpolation family K~_t whose surface area measure is the
/// pointwise geometric mean of the endpoint measures:
///   weight_i(t) = alpha_i^{1-t} beta_i^t on the common canonical support.
///
/// Mutual absolute continuity of the endpoint measures is interpreted
/// discretely as identical canonical support sets; construction refuses
/// mismatched supports (naming the offending directions) unless
/// allow_support_intersection is set, in which case the family lives on the
/// intersection support and the endpoint limits are bodies contained in K0
/// and K1 rather than the bodies themselves.
///
/// Solved bodies are cached per t behind a mutex, so concurrent reads of
/// distinct t values from multiple threads are safe.
class LogBlaschkePath {
 public:
  LogBlaschkePath(SymmetricPolytope k0, SymmetricPolytope k1,
                  SolverOptions opts = {}, bool allow_support_intersection = false);

  const SymmetricPolytope& endpoint0() const { return k0_; }
  const SymmetricPolytope& endpoint1() const { return k1_; }
  int dim() const { return k0_.dim(); }

  /// Common canonical support and the per-direction measure data.
  const std::vector<Direction>& support() const { return dirs_; }
  const Eigen::VectorXd& alpha() const { return alpha_; }
  const Eigen::VectorXd& beta() const { return beta_; }
  /// phi = dS_{K1}/dS_{K0} per canonical direction (= beta/alpha).
  const Eigen::VectorXd& phi() const { return phi_; }

  /// K~_t. t = 0 and t = 1 short-circuit to the endpoints only when the
  /// supports match exactly (no intersection took place).
  const SymmetricPolytope& body_at(double t) const;
  double volume_at(double t) const { return body_at(t).volume(); }
  /// Solver residual for the body at t (0 for short-circuited endpoints).
  double residual_at(double t) const;

  const SolverOptions& solver_options() const { return opts_; }
  bool endpoints_exact() const { return endpoints_exact_; }

 private:
  SymmetricPolytope k0_, k1_;
  std::vector<Direction> dirs_;
  Eigen::VectorXd alpha_, beta_, phi_;
  SolverOptions opts_;
  bool endpoints_exact_ = true;
  mutable std::mutex mutex_;
  mutable std::map<double, MinkowskiSolution> cache_;
};

/// One-off log-Blaschke combination (1-t).K0 #_0 t.K1.
SymmetricPolytope log_blaschke(const SymmetricPolytope& k0, const SymmetricPolytope& k1,
                               double t, const SolverOptions& opts = {},
                               bool allow_support_intersection = false);

/// Outer approximation of the Wulff body
///   K_t = { x : x.v <= h_{K0}(v)^{1-t} h_{K1}(v)^t  for all v },
/// cut by the endpoint facet normals, both vertex direction sets and a
/// prefix-nested quasi-uniform grid. Refinement doubles the grid; since the
/// grids nest, volume estimates decrease monotonically toward V(K_t) from
/// above. `volume_error` is the Richardson-style gap between the two
/// resolutions; the reported body is the finer one.
struct GeometricMeanBody {
  SymmetricPolytope body;       // outer body at resolution 2m
  double volume_coarse = 0.0;   // resolution m
  double volume = 0.0;          // resolution 2m (= body.volume())
  double volume_error = 0.0;    // max(volume_coarse - volume, 0)
  int resolution = 0;           // m
};

GeometricMeanBody geometric_mean_body(const SymmetricPolytope& k0,
                                      const SymmetricPolytope& k1, double t,
                                      int resolution = 0);

/// d/dt V(K~_t) = n/(n-1) * integral of log(dS_{K1}/dS_{K0}) dV_{K~_t},
/// one-sided at the endpoints.
double volume_derivative(const LogBlaschkePath& path, double t);

struct EndpointConvergenceReport {
  std::vector<double> t_values;
  std::vector<double> distances;  // d_H(K~_t, K0)
  bool monotone = false;          // decreasing with t
  double final_distance = 0.0;
  double diameter = 0.0;          // of K0
  bool flagged = false;           // not monotone, or final distance too large
};

/// Hausdorff distances d_H(K~_t, K0) along a decreasing list of t values.
/// The report is flagged when the sequence fails to decrease or the last
/// distance exceeds `distance_bound_rel * diam(K0)`.
EndpointConvergenceReport endpoint_convergence_check(
    const LogBlaschkePath& path, const std::vector<double>& eps_list,
    double distance_bound_rel = 1e-3);

}  // namespace logbm

#endif  // LOGBM_COMBINATIONS_HPP
