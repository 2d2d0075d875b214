#include "logbm/combinations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "logbm/sphere.hpp"

namespace logbm {

namespace {

/// Matches the canonical supports of two measures. Returns aligned
/// (directions, alpha, beta) over the common support; `mismatch` collects
/// directions present on one side only.
struct MatchedSupport {
  std::vector<Direction> dirs;
  Eigen::VectorXd alpha, beta;
  std::vector<Direction> only_in_a, only_in_b;
};

MatchedSupport match_supports(const EvenDiscreteMeasure& sa,
                              const EvenDiscreteMeasure& sb) {
  MatchedSupport m;
  std::vector<double> va, vb;
  std::vector<bool> used_b(static_cast<std::size_t>(sb.size()), false);
  for (int i = 0; i < sa.size(); ++i) {
    const int j = sb.find(sa.direction(i));
    if (j >= 0) {
      used_b[static_cast<std::size_t>(j)] = true;
      m.dirs.push_back(sa.direction(i));
      va.push_back(sa.weight(i));
      vb.push_back(sb.weight(j));
    } else {
      m.only_in_a.push_back(sa.direction(i));
    }
  }
  for (int j = 0; j < sb.size(); ++j) {
    if (!used_b[static_cast<std::size_t>(j)]) m.only_in_b.push_back(sb.direction(j));
  }
  m.alpha = Eigen::Map<Eigen::VectorXd>(va.data(), static_cast<Eigen::Index>(va.size()));
  m.beta = Eigen::Map<Eigen::VectorXd>(vb.data(), static_cast<Eigen::Index>(vb.size()));
  return m;
}

std::string describe_dirs(const std::vector<Direction>& dirs, std::size_t cap = 4) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dirs.size() && i < cap; ++i) {
    os << (i ? ", " : "") << "[" << dirs[i].coords().transpose() << "]";
  }
  if (dirs.size() > cap) os << ", ...";
  return os.str();
}

}  // namespace

LogBlaschkePath::LogBlaschkePath(SymmetricPolytope k0, SymmetricPolytope k1,
                                 SolverOptions opts, bool allow_support_intersection)
    : k0_(std::move(k0)), k1_(std::move(k1)), opts_(opts) {
  if (k0_.dim() != k1_.dim()) {
    throw DimensionMismatch("LogBlaschkePath: endpoint dimension mismatch");
  }
  const auto sa = surface_area_measure(k0_);
  const auto sb = surface_area_measure(k1_);
  MatchedSupport m = match_supports(sa, sb);
  if (!m.only_in_a.empty() || !m.only_in_b.empty()) {
    if (!allow_support_intersection) {
      std::ostringstream os;
      os << "LogBlaschkePath: surface area measures are not mutually absolutely "
            "continuous (discrete sense). ";
      if (!m.only_in_a.empty()) os << "Only in S_K0: " << describe_dirs(m.only_in_a) << ". ";
      if (!m.only_in_b.empty()) os << "Only in S_K1: " << describe_dirs(m.only_in_b) << ".";
      throw SupportMismatch(os.str());
    }
    endpoints_exact_ = false;
  }
  if (m.dirs.empty() || !directions_span(m.dirs, k0_.dim())) {
    throw NonSpanning("LogBlaschkePath: common support does not span R^n");
  }
  dirs_ = std::move(m.dirs);
  alpha_ = std::move(m.alpha);
  beta_ = std::move(m.beta);
  phi_ = beta_.cwiseQuotient(alpha_);
}

const SymmetricPolytope& LogBlaschkePath::body_at(double t) const {
  if (t < 0.0 || t > 1.0) throw GeometryError("LogBlaschkePath: t outside [0,1]");
  if (endpoints_exact_) {
    if (t == 0.0) return k0_;
    if (t == 1.0) return k1_;
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(t);
  if (it == cache_.end()) {
    Eigen::VectorXd w =
        (alpha_.array().pow(1.0 - t) * beta_.array().pow(t)).matrix();
    MinkowskiSolution sol = solve_even_minkowski(EvenDiscreteMeasure(dirs_, w), opts_);
    it = cache_.emplace(t, std::move(sol)).first;
  }
  return it->second.body;
}

double LogBlaschkePath::residual_at(double t) const {
  if (endpoints_exact_ && (t == 0.0 || t == 1.0)) return 0.0;
  body_at(t);  // ensure cached
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.at(t).residual;
}

SymmetricPolytope log_blaschke(const SymmetricPolytope& k0, const SymmetricPolytope& k1,
                               double t, const SolverOptions& opts,
                               bool allow_support_intersection) {
  LogBlaschkePath path(k0, k1, opts, allow_support_intersection);
  return path.body_at(t);
}

GeometricMeanBody geometric_mean_body(const SymmetricPolytope& k0,
                                      const SymmetricPolytope& k1, double t,
                                      int resolution) {
  if (k0.dim() != k1.dim()) {
    throw DimensionMismatch("geometric_mean_body: dimension mismatch");
  }
  const int n = k0.dim();
  if (resolution <= 0) resolution = (n == 2) ? 256 : (n == 3 ? 96 : 16);

  std::vector<Direction> base;
  for (const auto& d : k0.normal_directions()) base.push_back(d);
  for (const auto& d : k1.normal_directions()) base.push_back(d);
  auto add_vertex_dirs = [&](const SymmetricPolytope& p) {
    for (Eigen::Index i = 0; i < p.vertices().cols(); ++i) {
      const Eigen::VectorXd v = p.vertices().col(i);
      if (v.norm() > 1e-12) base.emplace_back(v);
    }
  };
  add_vertex_dirs(k0);
  add_vertex_dirs(k1);

  auto build_at = [&](int grid) {
    std::vector<Direction> dirs = base;
    for (const auto& d : nested_direction_sequence(n, grid)) dirs.push_back(d);
    Eigen::VectorXd h(static_cast<Eigen::Index>(dirs.size()));
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const auto& v = dirs[i].coords();
      h[static_cast<Eigen::Index>(i)] =
          std::pow(support_value(k0, v), 1.0 - t) * std::pow(support_value(k1, v), t);
    }
    return wulff_shape(dirs, h);
  };

  GeometricMeanBody out;
  out.resolution = resolution;
  SymmetricPolytope coarse = build_at(resolution);
  out.volume_coarse = coarse.volume();
  out.body = build_at(2 * resolution);
  out.volume = out.body.volume();
  out.volume_error = std::max(0.0, out.volume_coarse - out.volume);
  return out;
}

double volume_derivative(const LogBlaschkePath& path, double t) {
  const SymmetricPolytope& body = path.body_at(t);
  const int n = path.dim();
  // Cone-volume weights of K~_t aligned with the path support.
  const auto& dirs = path.support();
  double acc = 0.0;
  for (int i = 0; i < body.pair_count(); ++i) {
    const int at = find_direction(dirs, body.normal_direction(i), 1e-10);
    if (at < 0) {
      throw GeometryError("volume_derivative: body facet outside the path support");
    }
    const double cone_w = body.supports()[i] * body.facet_areas()[i] / n;
    acc += std::log(path.phi()[at]) * cone_w;
  }
  return (static_cast<double>(n) / (n - 1)) * 2.0 * acc;  // full measure = 2x canonical
}

EndpointConvergenceReport endpoint_convergence_check(
    const LogBlaschkePath& path, const std::vector<double>& eps_list,
    double distance_bound_rel) {
  EndpointConvergenceReport rep;
  rep.t_values = eps_list;
  rep.diameter = path.endpoint0().diameter();
  for (double t : eps_list) {
    rep.distances.push_back(hausdorff_distance(path.body_at(t), path.endpoint0()));
  }
  rep.monotone = true;
  std::vector<double> sorted_t = eps_list;
  std::vector<std::size_t> order(eps_list.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return eps_list[a] > eps_list[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (rep.distances[order[i]] > rep.distances[order[i - 1]] + 1e-12 * rep.diameter) {
      rep.monotone = false;
    }
  }
  rep.final_distance = order.empty() ? 0.0 : rep.distances[order.back()];
  rep.flagged = !rep.monotone || rep.final_distance > distance_bound_rel * rep.diameter;
  return rep;
}

}  // namespace logbm
