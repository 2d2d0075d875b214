#include "logbm/inequalities.hpp"

#include <cmath>
#include <sstream>

#include "logbm/relations.hpp"

namespace logbm {

namespace {
constexpr double kHardTolRel = 1e-8;   // numerical floor below which nothing is a violation
constexpr double kEqualityRel = 1e-6;  // |deficit| <= this x scale declares equality
constexpr double kPi = 3.14159265358979323846;

/// Solver residual -> volume error bound: (area mismatch) x (max support) / n,
/// summed over the full measure.
double solver_volume_budget(const LogBlaschkePath& path, double t,
                            const SymmetricPolytope& body) {
  const double resid = path.residual_at(t);
  const double total_mass = 2.0 * body.facet_areas().sum();
  const double hmax = body.supports().maxCoeff();
  return resid * total_mass * hmax / body.dim();
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kSatisfied: return "satisfied";
    case Verdict::kEqualityWithinTol: return "equality_within_tol";
    case Verdict::kViolatedBeyondBudget: return "violated_beyond_budget";
  }
  return "unknown";
}

DeficitReport make_deficit_report(std::string name, double t, double lhs, double rhs,
                                  double deficit, double budget, double scale,
                                  std::string note) {
  DeficitReport r;
  r.name = std::move(name);
  r.t = t;
  r.lhs = lhs;
  r.rhs = rhs;
  r.deficit = deficit;
  r.error_budget = budget;
  r.note = std::move(note);
  const double s = std::max({std::abs(lhs), std::abs(rhs), scale});
  if (deficit < -(budget + kHardTolRel * s)) {
    r.verdict = Verdict::kViolatedBeyondBudget;
  } else if (std::abs(deficit) <= std::max(kEqualityRel * s, budget)) {
    r.verdict = Verdict::kEqualityWithinTol;
  } else {
    r.verdict = Verdict::kSatisfied;
  }
  return r;
}

std::vector<double> default_t_grid() {
  std::vector<double> g{0.01};
  for (int i = 1; i <= 9; ++i) g.push_back(0.1 * i);
  g.push_back(0.99);
  return g;
}

DeficitReport lbm_deficit(const SymmetricPolytope& k0, const SymmetricPolytope& k1,
                          double t, int resolution) {
  GeometricMeanBody gm = geometric_mean_body(k0, k1, t, resolution);
  const double rhs = std::pow(k0.volume(), 1.0 - t) * std::pow(k1.volume(), t);
  const double lhs = gm.volume;
  return make_deficit_report("lbm", t, lhs, rhs, lhs - rhs, gm.volume_error,
                             std::max(k0.volume(), k1.volume()),
                             "outer Wulff approximation: volume overestimate can only "
                             "confirm the inequality, never refute it");
}

DeficitReport rlbm_deficit(const LogBlaschkePath& path, double t) {
  const SymmetricPolytope& body = path.body_at(t);
  const double lhs = body.volume();
  const double rhs = std::pow(path.endpoint0().volume(), 1.0 - t) *
                     std::pow(path.endpoint1().volume(), t);
  const double budget = solver_volume_budget(path, t, body);
  return make_deficit_report("rlbm", t, lhs, rhs, rhs - lhs, budget,
                             std::max(path.endpoint0().volume(), path.endpoint1().volume()));
}

DeficitReport rlbm_deficit(const SymmetricPolytope& k0, const SymmetricPolytope& k1,
                           double t, const SolverOptions& opts) {
  LogBlaschkePath path(k0, k1, opts);
  return rlbm_deficit(path, t);
}

ContainmentReport containment_check_2d(const LogBlaschkePath& path, double t, int grid) {
  if (path.dim() != 2) throw DimensionMismatch("containment_check_2d: dimension must be 2");
  const SymmetricPolytope& tilde = path.body_at(t);
  const SymmetricPolytope& k0 = path.endpoint0();
  const SymmetricPolytope& k1 = path.endpoint1();

  auto gm_value = [&](const Eigen::Vector2d& v) {
    return std::pow(support_value(k0, v), 1.0 - t) * std::pow(support_value(k1, v), t);
  };

  ContainmentReport rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  const double scale = std::max(tilde.max_vertex_norm(),
                                std::max(k0.max_vertex_norm(), k1.max_vertex_norm()));

  auto probe = [&](const Eigen::Vector2d& v, double angle) {
    const double margin = gm_value(v) - support_value(tilde, v);
    if (margin < rep.min_margin) {
      rep.min_margin = margin;
      rep.worst_angle = angle;
    }
  };
  for (int g = 0; g < grid; ++g) {
    const double a = kPi * g / grid;
    probe({std::cos(a), std::sin(a)}, a);
  }
  for (Eigen::Index i = 0; i < tilde.vertices().cols(); ++i) {
    Eigen::Vector2d v = tilde.vertices().col(i);
    if (v.norm() < 1e-14) continue;
    v.normalize();
    probe(v, std::atan2(v.y(), v.x()));
  }
  // Both support functions are scale-Lipschitz in the angle; the margin
  // between grid points cannot drop by more than this slack.
  const double slack = 2.0 * scale * (kPi / grid) * 0.5;
  rep.pass = rep.min_margin >= -1e-9 * scale;
  rep.conclusive = rep.min_margin >= slack - 1e-9 * scale || rep.pass;

  // Per-direction projection inequality at each combined-support normal u:
  // the body's width in direction rot90(u) obeys the same geometric-mean
  // bound (the planar projection onto a line is 2 h at the rotated
  // direction).
  rep.min_projection_margin = std::numeric_limits<double>::infinity();
  for (const auto& u : path.support()) {
    Eigen::Vector2d w(-u.coords()[1], u.coords()[0]);
    const double margin = gm_value(w) - support_value(tilde, w);
    rep.min_projection_margin = std::min(rep.min_projection_margin, margin);
  }
  rep.projection_pass = rep.min_projection_margin >= -1e-9 * scale;
  return rep;
}

TildeWulffReport tilde_vs_wulff_deficit(const LogBlaschkePath& path, double t,
                                        int resolution) {
  const SymmetricPolytope& tilde = path.body_at(t);
  GeometricMeanBody gm = geometric_mean_body(path.endpoint0(), path.endpoint1(), t,
                                             resolution);
  TildeWulffReport rep;
  const double budget = gm.volume_error + solver_volume_budget(path, t, tilde);
  rep.deficit = make_deficit_report(
      "tilde_vs_wulff", t, gm.volume, tilde.volume(), gm.volume - tilde.volume(),
      budget, std::max(path.endpoint0().volume(), path.endpoint1().volume()),
      "lhs is an outer volume overestimate of V(K_t)");
  if (path.dim() == 2) rep.containment = containment_check_2d(path, t);
  return rep;
}

DeficitReport lm_deficit(const SymmetricPolytope& k, const SymmetricPolytope& l) {
  if (k.dim() != l.dim()) throw DimensionMismatch("lm_deficit: dimension mismatch");
  const int n = k.dim();
  double lhs = 0.0;
  for (int i = 0; i < k.pair_count(); ++i) {
    const double cone_w = k.supports()[i] * k.facet_areas()[i] / n;
    lhs += std::log(support_value(l, k.normals().col(i)) / k.supports()[i]) * cone_w;
  }
  lhs *= 2.0;
  const double rhs = (k.volume() / n) * std::log(l.volume() / k.volume());
  return make_deficit_report("lm", std::numeric_limits<double>::quiet_NaN(), lhs, rhs,
                             lhs - rhs, 0.0, k.volume());
}

DeficitReport weak_rlm_deficit(const SymmetricPolytope& k, const SymmetricPolytope& l) {
  const auto sk = surface_area_measure(k);
  const auto sl = surface_area_measure(l);
  const int n = k.dim();
  double lhs_lm = 0.0, phi_integral = 0.0;
  for (int i = 0; i < sk.size(); ++i) {
    const int j = sl.find(sk.direction(i));
    if (j < 0) {
      std::ostringstream os;
      os << "weak_rlm_deficit: direction [" << sk.direction(i).coords().transpose()
         << "] carries S_K mass but no S_L mass";
      throw SupportMismatch(os.str());
    }
    const double cone_w = k.supports()[i] * k.facet_areas()[i] / n;
    lhs_lm += std::log(support_value(l, k.normals().col(i)) / k.supports()[i]) * cone_w;
    phi_integral += std::log(sl.weight(j) / sk.weight(i)) * cone_w;
  }
  if (sl.size() != sk.size()) {
    throw SupportMismatch("weak_rlm_deficit: S_L has mass outside supp S_K");
  }
  lhs_lm *= 2.0;
  phi_integral *= 2.0;
  const double rhs = phi_integral / (n - 1);
  return make_deficit_report("weak_rlm", std::numeric_limits<double>::quiet_NaN(),
                             lhs_lm, rhs, lhs_lm - rhs, 0.0, k.volume());
}

ProjectionRlmReport projection_rlm_deficit(const SymmetricPolytope& k,
                                           const SymmetricPolytope& l,
                                           const Direction& u) {
  const auto sk = surface_area_measure(k);
  const auto sl = surface_area_measure(l);
  if (sl.size() != sk.size()) {
    throw SupportMismatch("projection_rlm_deficit: support sizes differ");
  }
  double lhs_integral = 0.0;
  double vol_k = 0.0, vol_l = 0.0;
  bool witness = true;
  double witness_log_min = std::numeric_limits<double>::infinity();
  double witness_log_max = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < sk.size(); ++i) {
    const int j = sl.find(sk.direction(i));
    if (j < 0) {
      throw SupportMismatch("projection_rlm_deficit: supports differ at a direction");
    }
    const double uv = std::abs(u.dot(sk.direction(i).coords()));
    const double phi = sl.weight(j) / sk.weight(i);
    lhs_integral += std::log(phi) * uv * sk.weight(i);
    vol_k += uv * sk.weight(i);
    vol_l += uv * sl.weight(j);
    if (uv > 1e-9) {
      witness_log_min = std::min(witness_log_min, std::log(phi));
      witness_log_max = std::max(witness_log_max, std::log(phi));
    }
  }
  lhs_integral *= 2.0;  // full measure
  const double rhs = 2.0 * vol_k * std::log(vol_l / vol_k);
  witness = (witness_log_max - witness_log_min) <= 1e-7;

  ProjectionRlmReport rep;
  rep.deficit = make_deficit_report("proj_rlm", std::numeric_limits<double>::quiet_NaN(),
                                    lhs_integral, rhs, rhs - lhs_integral, 0.0,
                                    std::max(vol_k, vol_l));
  rep.witness_constant = witness;
  rep.witness_value = witness ? std::exp(0.5 * (witness_log_min + witness_log_max)) : 1.0;
  return rep;
}

ChainReport chain_deficits(const LogBlaschkePath& path, double t, int resolution) {
  const SymmetricPolytope& tilde = path.body_at(t);
  const SymmetricPolytope& k0 = path.endpoint0();
  const SymmetricPolytope& k1 = path.endpoint1();
  const int n = path.dim();

  // Hoelder step: (1/n) integral of h0^{1-t} h1^t dS_{K~_t} against the
  // endpoint volume product. All quantities exact up to solver residual.
  double gm_integral = 0.0;
  for (int i = 0; i < tilde.pair_count(); ++i) {
    const auto v = tilde.normals().col(i);
    const double g = std::pow(support_value(k0, v), 1.0 - t) *
                     std::pow(support_value(k1, v), t);
    gm_integral += g * tilde.facet_areas()[i];
  }
  gm_integral *= 2.0 / n;
  const double vol_product = std::pow(k0.volume(), 1.0 - t) * std::pow(k1.volume(), t);
  const double budget = solver_volume_budget(path, t, tilde);

  ChainReport rep;
  rep.hoelder = make_deficit_report("chain_hoelder", t, vol_product, gm_integral,
                                    vol_product - gm_integral, budget,
                                    std::max(k0.volume(), k1.volume()));

  // Minkowski step against the outer Wulff body itself (a genuine polytope,
  // so Minkowski's inequality applies exactly to the pair).
  GeometricMeanBody gm = geometric_mean_body(k0, k1, t, resolution);
  const double v1 = mixed_volume_V1(tilde, gm.body);
  const double bound = std::pow(tilde.volume(), (n - 1.0) / n) *
                       std::pow(gm.body.volume(), 1.0 / n);
  rep.minkowski = make_deficit_report("chain_minkowski", t, v1, bound, v1 - bound,
                                      budget, std::max(k0.volume(), k1.volume()));
  return rep;
}

EqualityScanReport equality_case_scan(const SymmetricPolytope& k0,
                                      const SymmetricPolytope& k1,
                                      std::vector<double> t_grid) {
  if (t_grid.empty()) t_grid = default_t_grid();
  LogBlaschkePath path(k0, k1);

  EqualityScanReport rep;
  rep.all_equality = true;
  for (double t : t_grid) {
    rep.rlbm.push_back(rlbm_deficit(path, t));
    if (rep.rlbm.back().verdict != Verdict::kEqualityWithinTol) rep.all_equality = false;
  }
  auto cert = detect_dilated_direct_summands(k0, k1);
  rep.detector_present = cert.has_value();
  rep.detector_class_count = cert ? cert->decomposition.class_count() : 0;

  if (rep.all_equality && !rep.detector_present) {
    rep.findings.push_back(
        "equality across the t grid but no dilated-direct-summand structure detected");
  }
  if (!rep.all_equality && rep.detector_present) {
    rep.findings.push_back(
        "dilated-direct-summand structure detected but deficits are not all equalities");
  }
  return rep;
}

}  // namespace logbm
