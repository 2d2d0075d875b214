#include "logbm/minkowski.hpp"

#include <cmath>
#include <limits>

namespace logbm {

namespace {

struct EvalFull {
  double value = 0.0;
  Eigen::VectorXd gradient;
  Eigen::VectorXd areas;   // aligned with target directions, 0 when inactive
  Eigen::MatrixXd qpair;   // dArea_i/dh_j (pair moves), same alignment
  double volume = 0.0;
  double weighted_support_sum = 0.0;  // sum alpha_i h_i
  double residual = 0.0;
  SymmetricPolytope body;
};

/// Maps each body normal to its index in the target direction list.
std::vector<int> align_to_target(const SymmetricPolytope& body,
                                 const std::vector<Direction>& target_dirs) {
  std::vector<int> map(static_cast<std::size_t>(body.pair_count()), -1);
  for (int i = 0; i < body.pair_count(); ++i) {
    const int at = find_direction(target_dirs, body.normal_direction(i), 1e-10);
    if (at < 0) {
      throw GeometryError("minkowski: body facet outside the target support");
    }
    map[static_cast<std::size_t>(i)] = at;
  }
  return map;
}

double compute_residual(const Eigen::VectorXd& alpha, const Eigen::VectorXd& areas) {
  const double area_sum = areas.sum();
  if (!(area_sum > 0.0)) return std::numeric_limits<double>::infinity();
  const double cpow = alpha.sum() / area_sum;  // c^{n-1}
  double r = 0.0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    r = std::max(r, std::abs(cpow * areas[i] - alpha[i]) / alpha[i]);
  }
  return r;
}

EvalFull evaluate_full(const std::vector<Direction>& dirs, const Eigen::VectorXd& alpha,
                       const Eigen::VectorXd& y, double barrier, bool with_hessian) {
  const int k = static_cast<int>(dirs.size());
  const int n = dirs[0].dim();
  Eigen::VectorXd h = y.array().exp();

  EvalFull e;
  e.body = wulff_shape(dirs, h);
  const auto map = align_to_target(e.body, dirs);

  e.areas = Eigen::VectorXd::Zero(k);
  for (int i = 0; i < e.body.pair_count(); ++i) {
    e.areas[map[static_cast<std::size_t>(i)]] = e.body.facet_areas()[i];
  }
  e.volume = e.body.volume();
  e.weighted_support_sum = alpha.dot(h);
  e.value = std::log(e.weighted_support_sum) - std::log(e.volume) / n - barrier * y.sum();
  e.residual = compute_residual(alpha, e.areas);

  e.gradient.resize(k);
  for (int i = 0; i < k; ++i) {
    e.gradient[i] = alpha[i] * h[i] / e.weighted_support_sum -
                    2.0 * e.areas[i] * h[i] / (n * e.volume) - barrier;
  }

  if (with_hessian) {
    // Fold ridge data into dArea_i/dh_j on target indices.
    Eigen::MatrixXd qp = Eigen::MatrixXd::Zero(k, k);
    for (const auto& rd : e.body.ridges()) {
      const int a = rd.facet_a, b = rd.facet_b;
      const Eigen::VectorXd ua = e.body.full_normal(a);
      const Eigen::VectorXd ub = e.body.full_normal(b);
      const double c = ua.dot(ub);
      const double s = std::sqrt(std::max(1e-16, 1.0 - c * c));
      const double w = rd.volume / s;
      if (a % 2 == 0) {
        const int i = map[static_cast<std::size_t>(a / 2)];
        const int j = map[static_cast<std::size_t>(b / 2)];
        qp(i, j) += w;
        qp(i, i) -= w * c;
      }
      if (b % 2 == 0) {
        const int i = map[static_cast<std::size_t>(b / 2)];
        const int j = map[static_cast<std::size_t>(a / 2)];
        qp(i, j) += w;
        qp(i, i) -= w * c;
      }
    }
    e.qpair = std::move(qp);
  }
  return e;
}

Eigen::MatrixXd hessian_from_state(const EvalFull& e, const Eigen::VectorXd& alpha,
                                   const Eigen::VectorXd& y, int n) {
  const int k = static_cast<int>(alpha.size());
  Eigen::VectorXd h = y.array().exp();
  const double s = e.weighted_support_sum;
  const double v = e.volume;
  Eigen::VectorXd ah = alpha.cwiseProduct(h);
  Eigen::VectorXd fh = e.areas.cwiseProduct(h);
  Eigen::MatrixXd hess = -ah * ah.transpose() / (s * s);
  hess.diagonal() += ah / s;
  Eigen::MatrixXd hb = (2.0 / (n * v)) * e.qpair.cwiseProduct(h * h.transpose());
  hb.diagonal() += (2.0 / (n * v)) * fh;
  hb -= (4.0 / (n * v * v)) * fh * fh.transpose();
  hess -= hb;
  (void)k;
  return hess;
}

}  // namespace

ObjectiveState evaluate_minkowski_objective(const EvenDiscreteMeasure& target,
                                            const Eigen::VectorXd& log_supports,
                                            double barrier) {
  EvalFull e = evaluate_full(target.directions(), target.weights(), log_supports,
                             barrier, false);
  ObjectiveState s;
  s.value = e.value;
  s.gradient = e.gradient;
  s.areas = e.areas;
  s.volume_gradient = 2.0 * e.areas;
  s.volume = e.volume;
  s.residual = e.residual;
  return s;
}

Eigen::MatrixXd area_jacobian(const SymmetricPolytope& body) {
  const int k = body.pair_count();
  Eigen::MatrixXd qp = Eigen::MatrixXd::Zero(k, k);
  for (const auto& rd : body.ridges()) {
    const int a = rd.facet_a, b = rd.facet_b;
    const double c = body.full_normal(a).dot(body.full_normal(b));
    const double s = std::sqrt(std::max(1e-16, 1.0 - c * c));
    const double w = rd.volume / s;
    if (a % 2 == 0) {
      qp(a / 2, b / 2) += w;
      qp(a / 2, a / 2) -= w * c;
    }
    if (b % 2 == 0) {
      qp(b / 2, a / 2) += w;
      qp(b / 2, b / 2) -= w * c;
    }
  }
  return qp;
}

MinkowskiSolution solve_even_minkowski(const EvenDiscreteMeasure& target,
                                       const SolverOptions& opts) {
  const int n = target.dim();
  if (n < 2) throw NonSpanning("solve_even_minkowski: need dimension >= 2");
  if (!target.spans_ambient()) {
    throw NonSpanning("solve_even_minkowski: target support does not span R^n");
  }
  const auto& dirs = target.directions();
  const Eigen::VectorXd& alpha = target.weights();
  const int k = target.size();

  Eigen::VectorXd y = Eigen::VectorXd::Zero(k);
  if (opts.initial_log_supports.size() == k) y = opts.initial_log_supports;
  EvalFull cur = evaluate_full(dirs, alpha, y, opts.barrier, opts.use_newton);

  MinkowskiSolution out;
  Eigen::VectorXd y_best = y;
  double best_residual = cur.residual;
  bool used_gradient_fallback = false;

  int iter = 0;
  double grad_step = 0.25;
  for (; iter < opts.max_iter; ++iter) {
    if (cur.residual <= opts.tol) break;
    if (cur.residual < best_residual) {
      best_residual = cur.residual;
      y_best = y;
    }

    // Keep the iterate on the V = 1 slice; the objective is scale invariant
    // so this is a pure renormalization.
    const double shift = std::log(cur.volume) / n;
    if (std::abs(shift) > 1e-14) {
      y.array() -= shift;
      cur = evaluate_full(dirs, alpha, y, opts.barrier, opts.use_newton);
    }

    Eigen::VectorXd dir;
    bool newton_dir = false;
    if (opts.use_newton) {
      Eigen::MatrixXd hess = hessian_from_state(cur, alpha, y, n);
      double lam = 1e-10 * std::max(1.0, hess.cwiseAbs().maxCoeff());
      for (int attempt = 0; attempt < 12; ++attempt) {
        Eigen::MatrixXd reg = hess;
        reg.diagonal().array() += lam;
        Eigen::LDLT<Eigen::MatrixXd> ldlt(reg);
        if (ldlt.info() == Eigen::Success) {
          Eigen::VectorXd d = ldlt.solve(-cur.gradient);
          if (d.allFinite() && cur.gradient.dot(d) < -1e-14 * cur.gradient.norm() * d.norm()) {
            dir = d;
            newton_dir = true;
            break;
          }
        }
        lam *= 10.0;
      }
    }
    if (!newton_dir) {
      dir = -cur.gradient;
      used_gradient_fallback = true;
    }

    // Cap the log-support step so a single move cannot collapse a facet.
    const double dmax = dir.cwiseAbs().maxCoeff();
    double step = newton_dir ? 1.0 : std::min(grad_step, 0.5 / std::max(1e-14, dmax));
    if (newton_dir && dmax * step > 2.0) step = 2.0 / dmax;

    const double slope = cur.gradient.dot(dir);
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      Eigen::VectorXd y_try = y + step * dir;
      EvalFull trial;
      try {
        trial = evaluate_full(dirs, alpha, y_try, opts.barrier, opts.use_newton);
      } catch (const DegenerateBody&) {
        step *= 0.5;
        continue;
      }
      if (trial.value <= cur.value + 1e-4 * step * slope) {
        y = std::move(y_try);
        cur = std::move(trial);
        accepted = true;
        if (!newton_dir) grad_step = std::min(1.0, step * 2.0);
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (newton_dir) {
        // Retry this iteration with a pure gradient step.
        used_gradient_fallback = true;
        dir = -cur.gradient;
        step = std::min(grad_step, 0.5 / std::max(1e-14, dir.cwiseAbs().maxCoeff()));
        bool grad_ok = false;
        for (int ls = 0; ls < 40; ++ls) {
          Eigen::VectorXd y_try = y + step * dir;
          EvalFull trial;
          try {
            trial = evaluate_full(dirs, alpha, y_try, opts.barrier, opts.use_newton);
          } catch (const DegenerateBody&) {
            step *= 0.5;
            continue;
          }
          if (trial.value < cur.value) {
            y = std::move(y_try);
            cur = std::move(trial);
            grad_ok = true;
            break;
          }
          step *= 0.5;
        }
        if (!grad_ok) break;  // stalled in both directions
      } else {
        break;
      }
    }
  }

  if (cur.residual > best_residual) {
    y = y_best;
    cur = evaluate_full(dirs, alpha, y, opts.barrier, false);
  }

  // Final absolute rescale: areas transform as c^{n-1}.
  const double area_sum = cur.areas.sum();
  if (area_sum > 0.0) {
    const double c = std::pow(alpha.sum() / area_sum, 1.0 / (n - 1));
    out.body = scaled(cur.body, c);
  } else {
    out.body = cur.body;
  }
  out.residual = compute_residual(alpha, cur.areas);
  out.iterations = iter;
  out.converged = out.residual <= opts.tol;
  out.method = used_gradient_fallback ? "gradient" : "newton";
  return out;
}

}  // namespace logbm
