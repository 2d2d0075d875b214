#ifndef LOGBM_INEQUALITIES_HPP
#define LOGBM_INEQUALITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "logbm/combinations.hpp"
#include "logbm/polytope.hpp"

namespace logbm {

enum class Verdict { kSatisfied, kEqualityWithinTol, kViolatedBeyondBudget };

std::string to_string(Verdict v);

/// Signed record of one inequality evaluation. deficit = favorable side
/// minus the other side, so deficit >= 0 always means "the inequality
/// holds". A violated_beyond_budget verdict requires
/// deficit < -(error_budget + hard numerical tolerance); equality within
/// 1e-6 x scale is reported as such.
struct DeficitReport {
  std::string name;
  double t = std::numeric_limits<double>::quiet_NaN();
  double lhs = 0.0;
  double rhs = 0.0;
  double deficit = 0.0;
  double error_budget = 0.0;
  Verdict verdict = Verdict::kSatisfied;
  std::string note;
};

DeficitReport make_deficit_report(std::string name, double t, double lhs, double rhs,
                                  double deficit, double budget, double scale,
                                  std::string note = {});

/// (LBM)  V(K_t) >= V(K0)^{1-t} V(K1)^t, with K_t the geometric-mean Wulff
/// body. Uses the outer approximation, whose volume overestimate can only
/// produce false confirmations of the inequality, never false refutations;
/// the refinement gap enters the budget and the note records the bias.
DeficitReport lbm_deficit(const SymmetricPolytope& k0, const SymmetricPolytope& k1,
                          double t, int resolution = 0);

/// (RLBM)  V(K~_t) <= V(K0)^{1-t} V(K1)^t. Exact up to solver residual.
DeficitReport rlbm_deficit(const LogBlaschkePath& path, double t);
DeficitReport rlbm_deficit(const SymmetricPolytope& k0, const SymmetricPolytope& k1,
                           double t, const SolverOptions& opts = {});

struct ContainmentReport {
  bool pass = false;        // no margin below the numerical tolerance
  bool conclusive = false;  // grid + Lipschitz slack covers all directions
  double min_margin = 0.0;  // min over directions of h_gm - h_tilde
  double worst_angle = 0.0;
  bool projection_pass = false;   // the per-direction projection inequalities
  double min_projection_margin = 0.0;
};

/// Two-dimensional containment K~_t subset K_t: support domination on a
/// fine angular grid (with a Lipschitz slack making the scan conclusive),
/// all vertex directions of K~_t, plus the per-direction projection
/// inequality h(u-perp) <= h0(u-perp)^{1-t} h1(u-perp)^t at every normal u
/// of the combined support.
ContainmentReport containment_check_2d(const LogBlaschkePath& path, double t,
                                       int grid = 2048);

/// V(K~_t) <= V(K_t); in dimension 2 the containment scan runs as well.
struct TildeWulffReport {
  DeficitReport deficit;
  std::optional<ContainmentReport> containment;
};
TildeWulffReport tilde_vs_wulff_deficit(const LogBlaschkePath& path, double t,
                                        int resolution = 0);

/// (LM)  integral log(h_L/h_K) dV_K >= (V(K)/n) log(V(L)/V(K)).
DeficitReport lm_deficit(const SymmetricPolytope& k, const SymmetricPolytope& l);

/// Weak reverse (LM): (1/(n-1)) integral log(dS_L/dS_K) dV_K <=
/// integral log(h_L/h_K) dV_K, on supp-matched bodies.
DeficitReport weak_rlm_deficit(const SymmetricPolytope& k, const SymmetricPolytope& l);

/// Per-direction reverse (LM) for projections, with its equality witness:
/// phi restricted to supp S_K away from u-perp is constant iff equality.
struct ProjectionRlmReport {
  DeficitReport deficit;
  bool witness_constant = false;  // phi constant on supp S_K minus u-perp
  double witness_value = 1.0;     // the constant c(u) when witness_constant
};
ProjectionRlmReport projection_rlm_deficit(const SymmetricPolytope& k,
                                           const SymmetricPolytope& l,
                                           const Direction& u);

/// Theorem 2.5 proof steps as separate nonnegative deficits: the Hoelder
/// step (geometric-mean support function against the endpoint volumes) and
/// the Minkowski step (mixed volume against the outer Wulff body).
struct ChainReport {
  DeficitReport hoelder;
  DeficitReport minkowski;
};
ChainReport chain_deficits(const LogBlaschkePath& path, double t, int resolution = 0);

/// Sweeps rlbm over a t grid, flags equality cases, and cross-checks them
/// against the dilated-direct-summand detector; disagreements between the
/// two are findings, not errors.
struct EqualityScanReport {
  std::vector<DeficitReport> rlbm;
  bool all_equality = false;
  bool detector_present = false;
  int detector_class_count = 0;
  std::vector<std::string> findings;
};
EqualityScanReport equality_case_scan(const SymmetricPolytope& k0,
                                      const SymmetricPolytope& k1,
                                      std::vector<double> t_grid = {});

/// The default t grid: 0.1 .. 0.9 step 0.1 plus the near-endpoint probes.
std::vector<double> default_t_grid();

}  // namespace logbm

#endif  // LOGBM_INEQUALITIES_HPP
