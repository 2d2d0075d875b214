#include "logbm/zonoid.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "logbm/sphere.hpp"

namespace logbm {

namespace {

/// Unit normal of the span of n-1 independent columns, or empty when the
/// columns are dependent.
std::optional<Eigen::VectorXd> span_normal(const Eigen::MatrixXd& cols, double tol) {
  const int n = static_cast<int>(cols.rows());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeFullU);
  if (svd.singularValues().minCoeff() <= tol) return std::nullopt;
  return Eigen::VectorXd(svd.matrixU().col(n - 1));
}

/// Sum over (d)-subsets of |det| of the selected columns of a d x m matrix.
double subset_determinant_sum(const Eigen::MatrixXd& m) {
  const int d = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (cols < d) return 0.0;
  double total = 0.0;
  std::vector<int> comb(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) comb[static_cast<std::size_t>(i)] = i;
  Eigen::MatrixXd sub(d, d);
  while (true) {
    for (int i = 0; i < d; ++i) sub.col(i) = m.col(comb[static_cast<std::size_t>(i)]);
    total += std::abs(sub.determinant());
    int i = d - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == cols - d + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  return total;
}

}  // namespace

double Zonotope::support_from_generators(const Eigen::VectorXd& v) const {
  return (gens_.transpose() * v).cwiseAbs().sum();
}

Zonotope zonotope_from_generators(const Eigen::MatrixXd& generators, int generator_cap) {
  const int n = static_cast<int>(generators.rows());
  if (n < 1 || generators.cols() < 1) {
    throw DegenerateBody("zonotope_from_generators: empty generator set");
  }

  // Merge parallel generators (segments on one line add lengths).
  std::vector<Eigen::VectorXd> merged;
  for (Eigen::Index c = 0; c < generators.cols(); ++c) {
    Eigen::VectorXd g = generators.col(c);
    const double len = g.norm();
    if (len < 1e-14) continue;
    bool absorbed = false;
    for (auto& h : merged) {
      const double cosang = std::abs(h.normalized().dot(g / len));
      if (cosang >= 1.0 - 1e-12) {
        const double sign = h.dot(g) >= 0 ? 1.0 : -1.0;
        h += sign * g;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(g);
  }
  const int m = static_cast<int>(merged.size());
  if (m > generator_cap) {
    std::ostringstream os;
    os << "zonotope_from_generators: " << m << " independent generators exceed the cap "
       << generator_cap;
    throw TooManyGenerators(os.str());
  }
  Eigen::MatrixXd g(n, m);
  for (int i = 0; i < m; ++i) g.col(i) = merged[static_cast<std::size_t>(i)];
  if (m < n) throw DegenerateBody("zonotope_from_generators: generators do not span");
  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(g);
    if (svd.singularValues()(n - 1) <= 1e-12 * svd.singularValues()(0)) {
      throw DegenerateBody("zonotope_from_generators: generators do not span");
    }
  }

  Zonotope z;
  z.gens_ = g;
  {
    std::vector<Direction> rho_dirs;
    Eigen::VectorXd rho_w(m);
    for (int i = 0; i < m; ++i) {
      rho_dirs.emplace_back(g.col(i));
      rho_w[i] = g.col(i).norm();
    }
    z.rho_.emplace(std::move(rho_dirs), std::move(rho_w));
  }

  if (n == 1) {
    z.body_ = detail_make_interval(g.cwiseAbs().sum());
    return z;
  }

  // Facet normals from (n-1)-subsets of generators.
  std::vector<Direction> dirs;
  std::vector<int> comb(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) comb[static_cast<std::size_t>(i)] = i;
  Eigen::MatrixXd cols(n, n - 1);
  const double gscale = g.cwiseAbs().maxCoeff();
  while (true) {
    for (int i = 0; i < n - 1; ++i) cols.col(i) = g.col(comb[static_cast<std::size_t>(i)]);
    if (auto nz = span_normal(cols, 1e-10 * gscale)) {
      Direction d{*nz};
      if (find_direction(dirs, d) < 0) dirs.push_back(d);
    }
    int i = n - 2;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - (n - 1) + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n - 1; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  const int k = static_cast<int>(dirs.size());
  Eigen::VectorXd sup(k), area(k);
  for (int i = 0; i < k; ++i) {
    const auto& v = dirs[static_cast<std::size_t>(i)].coords();
    sup[i] = z.support_from_generators(v);
    // Facet = translated sub-zonotope of the generators orthogonal to v.
    std::vector<int> ortho;
    for (int c = 0; c < m; ++c) {
      if (std::abs(g.col(c).dot(v)) <= 1e-10 * g.col(c).norm()) ortho.push_back(c);
    }
    Eigen::MatrixXd basis = hyperplane_basis(v);
    Eigen::MatrixXd t(n - 1, static_cast<Eigen::Index>(ortho.size()));
    for (std::size_t c = 0; c < ortho.size(); ++c) {
      t.col(static_cast<Eigen::Index>(c)) = basis.transpose() * g.col(ortho[c]);
    }
    area[i] = std::pow(2.0, n - 1) * subset_determinant_sum(t);
  }

  if (n <= 3) {
    z.body_ = wulff_shape(dirs, sup);
  } else {
    // Dimension 4: vertex enumeration over hundreds of facets is out of desk
    // scale; keep the direct facet data and a sign-combination support cloud
    // (its support function equals h_Z even though not all points are
    // extreme).
    const double volume = (2.0 / n) * sup.dot(area);
    const int count = 1 << m;
    Eigen::MatrixXd cloud(n, count);
    for (int s = 0; s < count; ++s) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
      for (int c = 0; c < m; ++c) x += ((s >> c) & 1) ? g.col(c) : Eigen::VectorXd(-g.col(c));
      cloud.col(s) = x;
    }
    z.body_ = detail_from_precomputed(n, dirs, sup, area, std::move(cloud), volume, false);
  }
  return z;
}

Zonotope project(const Zonotope& z, const Direction& u) {
  const Eigen::MatrixXd basis = hyperplane_basis(u.coords());
  return zonotope_from_generators(basis.transpose() * z.generators(),
                                  z.generator_count());
}

namespace {

/// Shared interpolation engine: samples S of the Wulff bodies of
/// h_K + s * h_extra over a candidate fan, fits the per-direction
/// polynomial of the given degree, validates on a held-out sample, and
/// returns the s^1 coefficients divided by 2 (projection normalization).
EvenDiscreteMeasure interpolate_mixed_measure(
    const SymmetricPolytope& k,
    const std::function<double(const Eigen::VectorXd&)>& h_extra,
    std::vector<Direction> candidates, double sample_scale, int degree) {
  const int num_samples = degree + 2;  // fit on degree+1 points, validate on 1

  for (int attempt = 0; attempt < 2; ++attempt) {
    const double sigma = sample_scale / (attempt == 0 ? 1.0 : 4.0);
    const int kc = static_cast<int>(candidates.size());
    Eigen::MatrixXd areas = Eigen::MatrixXd::Zero(kc, num_samples);
    bool fan_stable = true;
    std::vector<bool> active_ref;
    for (int j = 0; j < num_samples; ++j) {
      const double s = sigma * (j + 1);
      Eigen::VectorXd h(kc);
      for (int i = 0; i < kc; ++i) {
        const auto& v = candidates[static_cast<std::size_t>(i)].coords();
        h[i] = support_value(k, v) + s * h_extra(v);
      }
      SymmetricPolytope sum = wulff_shape(candidates, h);
      std::vector<bool> active(static_cast<std::size_t>(kc), false);
      for (int b = 0; b < sum.pair_count(); ++b) {
        const int at = find_direction(candidates, sum.normal_direction(b), 1e-10);
        if (at < 0) throw InterpolationIllConditioned(
            "mixed measure: sum facet escaped the candidate fan");
        areas(at, j) = sum.facet_areas()[b];
        active[static_cast<std::size_t>(at)] = true;
      }
      if (j == 0) {
        active_ref = active;
      } else if (active != active_ref) {
        fan_stable = false;
      }
    }
    if (!fan_stable) continue;  // retry with rescaled samples

    // Exact Vandermonde fit on the first degree+1 samples.
    const int np = degree + 1;
    Eigen::MatrixXd vand(np, np);
    for (int r = 0; r < np; ++r) {
      const double s = sigma * (r + 1);
      for (int c = 0; c < np; ++c) vand(r, c) = std::pow(s, c);
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(vand);
    const double area_scale = areas.cwiseAbs().maxCoeff() + 1e-30;
    bool validated = true;
    std::vector<Direction> out_dirs;
    std::vector<double> out_w;
    const double s_check = sigma * num_samples;
    for (int i = 0; i < kc && validated; ++i) {
      Eigen::VectorXd rhs = areas.row(i).head(np).transpose();
      Eigen::VectorXd coef = lu.solve(rhs);
      double pred = 0.0;
      for (int c = 0; c < np; ++c) pred += coef[c] * std::pow(s_check, c);
      if (std::abs(pred - areas(i, num_samples - 1)) > 1e-7 * area_scale) {
        validated = false;
        break;
      }
      const double w = coef[1] / 2.0;  // projection-normalized mixed weight
      if (w < -1e-7 * area_scale) {
        throw InterpolationIllConditioned(
            "mixed measure: significantly negative weight extracted");
      }
      if (w > 1e-10 * area_scale) {
        out_dirs.push_back(candidates[static_cast<std::size_t>(i)]);
        out_w.push_back(w);
      }
    }
    if (!validated) continue;
    if (out_dirs.empty()) {
      throw InterpolationIllConditioned("mixed measure: extracted measure is zero");
    }
    Eigen::VectorXd w(static_cast<Eigen::Index>(out_w.size()));
    for (std::size_t i = 0; i < out_w.size(); ++i) w[static_cast<Eigen::Index>(i)] = out_w[i];
    return EvenDiscreteMeasure(std::move(out_dirs), std::move(w));
  }
  throw InterpolationIllConditioned(
      "mixed measure: normal fan unstable across samples after rescaling");
}

/// Edge directions of a polytope from its ridge data (dimension 3) or
/// vertex pairs (dimension 2 facets are the edges themselves).
std::vector<Eigen::VectorXd> edge_directions_3d(const SymmetricPolytope& k) {
  std::vector<Eigen::VectorXd> out;
  for (const auto& rd : k.ridges()) {
    if (rd.vertex_ids.size() < 2) continue;
    Eigen::VectorXd e = k.vertices().col(rd.vertex_ids[0]) -
                        k.vertices().col(rd.vertex_ids[1]);
    if (e.norm() > 1e-12) out.push_back(e);
  }
  return out;
}

std::vector<Direction> segment_candidates(const SymmetricPolytope& k,
                                          const Direction& u) {
  std::vector<Direction> cand = k.normal_directions();
  const int n = k.dim();
  auto push = [&](const Eigen::VectorXd& v) {
    if (v.norm() < 1e-12) return;
    Direction d{v};
    if (find_direction(cand, d) < 0) cand.push_back(d);
  };
  if (n == 2) {
    Eigen::VectorXd w(2);
    w << -u.coords()[1], u.coords()[0];
    push(w);
  } else if (n == 3) {
    for (const auto& e : edge_directions_3d(k)) {
      push(Eigen::Vector3d(e.head<3>()).cross(Eigen::Vector3d(u.coords().head<3>())));
    }
  } else {
    throw GeometryError(
        "mixed_surface_measure_segment: interpolation fan is only enumerable in "
        "dimensions 2 and 3");
  }
  return cand;
}

}  // namespace

EvenDiscreteMeasure mixed_surface_measure_segment(const SymmetricPolytope& k,
                                                  const Direction& u) {
  if (u.dim() != k.dim()) {
    throw DimensionMismatch("mixed_surface_measure_segment: dimension mismatch");
  }
  const int n = k.dim();
  auto h_seg = [&u](const Eigen::VectorXd& v) { return std::abs(u.dot(v)); };
  return interpolate_mixed_measure(k, h_seg, segment_candidates(k, u),
                                   k.diameter() / 2.0, n - 1);
}

EvenDiscreteMeasure mixed_surface_measure_zonotope(const SymmetricPolytope& k,
                                                   const Zonotope& z) {
  if (z.dim() != k.dim()) {
    throw DimensionMismatch("mixed_surface_measure_zonotope: dimension mismatch");
  }
  const int n = k.dim();
  std::vector<Direction> cand = k.normal_directions();
  auto push = [&](const Eigen::VectorXd& v) {
    if (v.norm() < 1e-12) return;
    Direction d{v};
    if (find_direction(cand, d) < 0) cand.push_back(d);
  };
  for (const auto& d : z.body().normal_directions()) push(d.coords());
  if (n == 3) {
    for (const auto& e : edge_directions_3d(k)) {
      for (int c = 0; c < z.generator_count(); ++c) {
        push(Eigen::Vector3d(e.head<3>())
                 .cross(Eigen::Vector3d(z.generators().col(c).head<3>())));
      }
    }
  } else if (n != 2) {
    throw GeometryError(
        "mixed_surface_measure_zonotope: interpolation fan is only enumerable in "
        "dimensions 2 and 3");
  }
  auto h_z = [&z](const Eigen::VectorXd& v) { return z.support_from_generators(v); };
  return interpolate_mixed_measure(k, h_z, std::move(cand),
                                   k.diameter() / z.body().diameter(), n - 1);
}

SamProjReport verify_sam_proj(const SymmetricPolytope& k, const Direction& u) {
  const Eigen::MatrixXd basis = hyperplane_basis(u.coords());
  const SymmetricPolytope shadow = project(k, u);
  const auto s_shadow = surface_area_measure(shadow);
  std::vector<Direction> lifted;
  for (int i = 0; i < s_shadow.size(); ++i) {
    lifted.emplace_back(basis * s_shadow.direction(i).coords());
  }
  EvenDiscreteMeasure lifted_measure(std::move(lifted), s_shadow.weights());
  const EvenDiscreteMeasure mixed = mixed_surface_measure_segment(k, u);

  SamProjReport rep;
  rep.tv_distance = total_variation_distance(lifted_measure, mixed, 1e-7);
  rep.total_mass = lifted_measure.total_mass_full();
  rep.pass = rep.tv_distance <= 1e-6 * rep.total_mass;
  return rep;
}

ZonoidMvReport verify_zonoidmv(const SymmetricPolytope& k, const Zonotope& z,
                               const std::function<double(const Eigen::VectorXd&)>& f) {
  const int n = k.dim();
  auto integrate = [&](const EvenDiscreteMeasure& m) {
    double acc = 0.0;
    for (int i = 0; i < m.size(); ++i) {
      const auto& v = m.direction(i).coords();
      acc += m.weight(i) * (f(v) + f(-v));
    }
    return acc;
  };

  ZonoidMvReport rep;
  const auto& rho = z.generating_measure();
  for (int gidx = 0; gidx < rho.size(); ++gidx) {
    const EvenDiscreteMeasure seg = mixed_surface_measure_segment(k, rho.direction(gidx));
    rep.lhs += rho.weight(gidx) * integrate(seg);
  }
  rep.lhs /= n;
  rep.rhs = integrate(mixed_surface_measure_zonotope(k, z)) / n;
  const double scale = std::max(std::abs(rep.lhs), std::abs(rep.rhs)) + 1e-30;
  rep.rel_discrepancy = std::abs(rep.lhs - rep.rhs) / scale;
  rep.pass = rep.rel_discrepancy <= 1e-6;
  return rep;
}

LmZonoidReport lm_zonoid_harness(const Zonotope& z, const SymmetricPolytope& l) {
  const SymmetricPolytope& k = z.body();
  LmZonoidReport rep;
  rep.lm = lm_deficit(k, l);

  const auto sk = surface_area_measure(k);
  const auto sl = surface_area_measure(l);
  rep.supports_matched = sk.size() == sl.size();
  if (rep.supports_matched) {
    for (int i = 0; i < sk.size() && rep.supports_matched; ++i) {
      if (sl.find(sk.direction(i)) < 0) rep.supports_matched = false;
    }
  }

  if (rep.supports_matched) {
    // Induction-step spot checks per generator direction u:
    //   integral log(phi) |u.v| dS_K
    //     <= 2 vol(P_u K) log(vol(P_u L) / vol(P_u K))        (projection reverse-LM)
    //     <= 2 integral log(h_L/h_K) h_K dS_{P_u K}           ((n-1)-dim LM).
    const auto& rho = z.generating_measure();
    for (int gi = 0; gi < rho.size(); ++gi) {
      const Direction& u = rho.direction(gi);
      PerGeneratorCheck chk;
      chk.u = u.coords();

      double lhs = 0.0, vol_pk = 0.0, vol_pl = 0.0;
      for (int i = 0; i < sk.size(); ++i) {
        const int j = sl.find(sk.direction(i));
        const double uv = std::abs(u.dot(sk.direction(i).coords()));
        lhs += std::log(sl.weight(j) / sk.weight(i)) * uv * sk.weight(i);
        vol_pk += uv * sk.weight(i);
        vol_pl += uv * sl.weight(j);
      }
      chk.lhs = 2.0 * lhs;
      chk.mid = 2.0 * vol_pk * std::log(vol_pl / vol_pk);

      const Zonotope pz = project(z, u);
      const Eigen::MatrixXd basis = hyperplane_basis(u.coords());
      const SymmetricPolytope& pk = pz.body();
      double rhs = 0.0;
      for (int i = 0; i < pk.pair_count(); ++i) {
        const Eigen::VectorXd lift = basis * pk.normals().col(i);
        rhs += std::log(support_value(l, lift) / pk.supports()[i]) *
               pk.supports()[i] * pk.facet_areas()[i];
      }
      chk.rhs = 4.0 * rhs;  // 2 x (full-measure integral), full = 2 x canonical
      const double scale = std::max({std::abs(chk.lhs), std::abs(chk.mid),
                                     std::abs(chk.rhs), vol_pk});
      chk.step1_ok = chk.mid - chk.lhs >= -1e-8 * scale;
      chk.step2_ok = chk.rhs - chk.mid >= -1e-8 * scale;
      rep.per_generator.push_back(std::move(chk));
    }
  }

  rep.equality = rep.lm.verdict == Verdict::kEqualityWithinTol;
  if (rep.equality && rep.supports_matched) {
    const auto witness = z.generating_measure().directions();
    auto cert = detect_dilated_direct_summands(k, l, &witness);
    rep.detector_present = cert.has_value();
    rep.detector_class_count = cert ? cert->decomposition.class_count() : 0;
  }
  return rep;
}

}  // namespace logbm
