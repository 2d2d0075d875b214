#include "logbm/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "logbm/hull.hpp"
#include "logbm/sphere.hpp"

namespace logbm {

namespace {

constexpr double kInactiveAreaRel = 1e-12;  // sliver facet threshold
constexpr double kVertexTolRel = 1e-9;

struct VertexEnumResult {
  Eigen::MatrixXd verts;                    // dim x nv
  std::vector<std::vector<int>> active;     // constraint ids per vertex
};

/// Dedicated 2-D path via polar duality: the convex hull of the scaled
/// normals u_a/h_a enumerates active constraints in angular order; hull
/// edges map to primal vertices. Handles thousands of constraints.
VertexEnumResult enumerate_vertices_2d(const Eigen::MatrixXd& u,
                                       const Eigen::VectorXd& h, double tol) {
  const int m = static_cast<int>(u.cols());
  Eigen::MatrixXd dual(2, m);
  for (int a = 0; a < m; ++a) dual.col(a) = u.col(a) / h[a];
  std::vector<int> hull = convex_hull_2d(dual);
  const int hn = static_cast<int>(hull.size());
  if (hn < 3) throw DegenerateBody("wulff_shape: 2-D intersection is unbounded");

  VertexEnumResult r;
  std::vector<Eigen::Vector2d> vts;
  for (int i = 0; i < hn; ++i) {
    const int a = hull[static_cast<std::size_t>(i)];
    const int b = hull[static_cast<std::size_t>((i + 1) % hn)];
    Eigen::Matrix2d m2;
    m2.row(0) = u.col(a).transpose();
    m2.row(1) = u.col(b).transpose();
    const double det = m2(0, 0) * m2(1, 1) - m2(0, 1) * m2(1, 0);
    if (std::abs(det) < 1e-14) continue;
    Eigen::Vector2d rhs(h[a], h[b]);
    vts.push_back(m2.inverse() * rhs);
  }
  r.verts.resize(2, static_cast<Eigen::Index>(vts.size()));
  for (std::size_t i = 0; i < vts.size(); ++i) r.verts.col(static_cast<Eigen::Index>(i)) = vts[i];
  // Active sets recomputed uniformly from the constraints.
  r.active.resize(vts.size());
  for (std::size_t i = 0; i < vts.size(); ++i) {
    for (int a = 0; a < m; ++a) {
      if (std::abs(u.col(a).dot(vts[i]) - h[a]) <= tol) r.active[i].push_back(a);
    }
  }
  return r;
}

/// 3-D polar-dual path for large constraint counts.
VertexEnumResult enumerate_vertices_3d_dual(const Eigen::MatrixXd& u,
                                            const Eigen::VectorXd& h, double tol) {
  const int m = static_cast<int>(u.cols());
  Eigen::MatrixXd dual(3, m);
  for (int a = 0; a < m; ++a) dual.col(a) = u.col(a) / h[a];
  auto tris = convex_hull_3d(dual);

  VertexEnumResult r;
  std::vector<Eigen::Vector3d> vts;
  const double vtol = kVertexTolRel;
  for (const auto& t : tris) {
    Eigen::Vector3d pa = dual.col(t[0]), pb = dual.col(t[1]), pc = dual.col(t[2]);
    Eigen::Vector3d nrm = (pb - pa).cross(pc - pa);
    double c = nrm.dot(pa);
    if (c < 0) {
      nrm = -nrm;
      c = -c;
    }
    if (c < 1e-14 * nrm.norm()) continue;
    Eigen::Vector3d x = nrm / c;
    bool dup = false;
    for (const auto& w : vts) {
      if ((w - x).norm() <= vtol * (1.0 + x.norm())) {
        dup = true;
        break;
      }
    }
    if (!dup) vts.push_back(x);
  }
  r.verts.resize(3, static_cast<Eigen::Index>(vts.size()));
  for (std::size_t i = 0; i < vts.size(); ++i) r.verts.col(static_cast<Eigen::Index>(i)) = vts[i];
  r.active.resize(vts.size());
  for (std::size_t i = 0; i < vts.size(); ++i) {
    for (int a = 0; a < m; ++a) {
      if (std::abs(u.col(a).dot(vts[i]) - h[a]) <= tol) r.active[i].push_back(a);
    }
  }
  return r;
}

/// Generic path: every d-subset of constraints whose normals are
/// independent yields a candidate vertex, kept when feasible. Fine at desk
/// scale (m <= ~60 in dimension 4), superseded by the dual paths otherwise.
VertexEnumResult enumerate_vertices_brute(const Eigen::MatrixXd& u,
                                          const Eigen::VectorXd& h, double tol) {
  const int d = static_cast<int>(u.rows());
  const int m = static_cast<int>(u.cols());
  VertexEnumResult r;
  std::vector<Eigen::VectorXd> vts;

  std::vector<int> comb(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) comb[static_cast<std::size_t>(i)] = i;
  Eigen::MatrixXd a(d, d);
  Eigen::VectorXd rhs(d);
  const auto ut = u.transpose();

  auto try_subset = [&]() {
    for (int i = 0; i < d; ++i) {
      a.row(i) = u.col(comb[static_cast<std::size_t>(i)]).transpose();
      rhs[i] = h[comb[static_cast<std::size_t>(i)]];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible()) return;
    Eigen::VectorXd x = lu.solve(rhs);
    if (((ut * x) - h).maxCoeff() > tol) return;
    for (const auto& w : vts) {
      if ((w - x).norm() <= kVertexTolRel * (1.0 + x.norm())) return;
    }
    vts.push_back(std::move(x));
  };

  // Lexicographic subset enumeration.
  while (true) {
    try_subset();
    int i = d - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - d + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }

  r.verts.resize(d, static_cast<Eigen::Index>(vts.size()));
  for (std::size_t i = 0; i < vts.size(); ++i) r.verts.col(static_cast<Eigen::Index>(i)) = vts[i];
  r.active.resize(vts.size());
  for (std::size_t i = 0; i < vts.size(); ++i) {
    for (int a2 = 0; a2 < m; ++a2) {
      if (std::abs(u.col(a2).dot(vts[i]) - h[a2]) <= tol) r.active[i].push_back(a2);
    }
  }
  return r;
}

std::vector<int> shared_vertices(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

double segment_length(const Eigen::MatrixXd& verts, const std::vector<int>& ids) {
  double best = 0.0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      best = std::max(best, (verts.col(ids[i]) - verts.col(ids[j])).norm());
    }
  }
  return best;
}

double polygon_area_in_plane(const Eigen::MatrixXd& verts, const std::vector<int>& ids,
                             const Eigen::MatrixXd& basis) {
  Eigen::MatrixXd pts(2, static_cast<Eigen::Index>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    pts.col(static_cast<Eigen::Index>(i)) = basis.transpose() * verts.col(ids[i]);
  }
  return convex_polygon_area(pts);
}

}  // namespace

double SymmetricPolytope::max_vertex_norm() const {
  double best = 0.0;
  for (Eigen::Index i = 0; i < vertices_.cols(); ++i) {
    best = std::max(best, vertices_.col(i).norm());
  }
  return best;
}

SymmetricPolytope wulff_shape(const std::vector<Direction>& normals_in,
                              const Eigen::VectorXd& supports_in) {
  if (normals_in.empty() || static_cast<Eigen::Index>(normals_in.size()) != supports_in.size()) {
    throw DimensionMismatch("wulff_shape: normal/support count mismatch");
  }
  const int n = normals_in[0].dim();

  // Merge duplicate axes, binding (minimal) support wins.
  std::vector<Direction> dirs;
  std::vector<double> sup;
  for (std::size_t i = 0; i < normals_in.size(); ++i) {
    if (!(supports_in[static_cast<Eigen::Index>(i)] > 0.0)) {
      throw DegenerateBody("wulff_shape: supports must be strictly positive");
    }
    if (normals_in[i].dim() != n) throw DimensionMismatch("wulff_shape: mixed dimensions");
    int at = find_direction(dirs, normals_in[i]);
    if (at >= 0) {
      sup[static_cast<std::size_t>(at)] =
          std::min(sup[static_cast<std::size_t>(at)], supports_in[static_cast<Eigen::Index>(i)]);
    } else {
      dirs.push_back(normals_in[i]);
      sup.push_back(supports_in[static_cast<Eigen::Index>(i)]);
    }
  }
  const int k = static_cast<int>(dirs.size());

  if (n == 1) {
    double hmin = sup[0];
    for (double s : sup) hmin = std::min(hmin, s);
    return detail_make_interval(hmin);
  }
  if (!directions_span(dirs, n)) {
    throw DegenerateBody("wulff_shape: normals do not span, intersection unbounded");
  }

  // Full (antipodally expanded) constraint set: 2i <-> +v_i, 2i+1 <-> -v_i.
  const int m = 2 * k;
  Eigen::MatrixXd u(n, m);
  Eigen::VectorXd h(m);
  for (int i = 0; i < k; ++i) {
    u.col(2 * i) = dirs[static_cast<std::size_t>(i)].coords();
    u.col(2 * i + 1) = -dirs[static_cast<std::size_t>(i)].coords();
    h[2 * i] = h[2 * i + 1] = sup[static_cast<std::size_t>(i)];
  }
  const double hscale = h.maxCoeff();
  const double tol = kVertexTolRel * hscale;

  VertexEnumResult ve;
  if (n == 2) {
    ve = enumerate_vertices_2d(u, h, tol);
  } else if (n == 3 && m > 64) {
    ve = enumerate_vertices_3d_dual(u, h, tol);
  } else {
    ve = enumerate_vertices_brute(u, h, tol);
  }
  if (ve.verts.cols() < n + 1) {
    throw DegenerateBody("wulff_shape: intersection has empty interior");
  }
  for (auto& act : ve.active) std::sort(act.begin(), act.end());

  // Facet vertex lists on the full constraint set.
  std::vector<std::vector<int>> facet_verts(static_cast<std::size_t>(m));
  for (std::size_t vi = 0; vi < ve.active.size(); ++vi) {
    for (int a : ve.active[vi]) {
      facet_verts[static_cast<std::size_t>(a)].push_back(static_cast<int>(vi));
    }
  }

  // Facet areas.
  Eigen::VectorXd area = Eigen::VectorXd::Zero(m);
  std::vector<Eigen::MatrixXd> facet_basis(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    const auto& ids = facet_verts[static_cast<std::size_t>(a)];
    if (static_cast<int>(ids.size()) < n) continue;
    if (n == 2) {
      area[a] = segment_length(ve.verts, ids);
    } else {
      facet_basis[static_cast<std::size_t>(a)] = hyperplane_basis(u.col(a));
      if (n == 3) {
        area[a] = polygon_area_in_plane(ve.verts, ids, facet_basis[static_cast<std::size_t>(a)]);
      }
      // n == 4 handled below from ridge data.
    }
  }

  // Ridges between facets (needed for n=4 areas and for volume derivatives).
  std::vector<RidgeData> ridges;
  std::vector<std::vector<std::pair<int, double>>> ridge_of_facet(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    const auto& va = facet_verts[static_cast<std::size_t>(a)];
    if (static_cast<int>(va.size()) < n) continue;
    for (int b = a + 1; b < m; ++b) {
      if (b == (a ^ 1)) continue;  // antipodal facets never share a ridge
      const auto& vb = facet_verts[static_cast<std::size_t>(b)];
      if (static_cast<int>(vb.size()) < n) continue;
      std::vector<int> sh = shared_vertices(va, vb);
      if (static_cast<int>(sh.size()) < n - 1) continue;
      RidgeData rd;
      rd.facet_a = a;
      rd.facet_b = b;
      rd.vertex_ids = sh;
      if (n == 2) {
        rd.volume = 1.0;
      } else if (n == 3) {
        rd.volume = segment_length(ve.verts, sh);
        if (rd.volume <= tol) continue;
      } else {
        // Ridge polygon spans {u_a, u_b}^perp.
        Eigen::MatrixXd span(n, 2);
        span.col(0) = u.col(a);
        span.col(1) = u.col(b);
        Eigen::FullPivHouseholderQR<Eigen::MatrixXd> qr(span);
        Eigen::MatrixXd q = qr.matrixQ();
        Eigen::MatrixXd w = q.rightCols(n - 2);
        rd.volume = polygon_area_in_plane(ve.verts, sh, w);
        if (rd.volume <= tol * tol) continue;
      }
      const int ri = static_cast<int>(ridges.size());
      ridge_of_facet[static_cast<std::size_t>(a)].push_back({ri, rd.volume});
      ridge_of_facet[static_cast<std::size_t>(b)].push_back({ri, rd.volume});
      ridges.push_back(std::move(rd));
    }
  }

  if (n == 4) {
    // vol_3(facet) = (1/3) sum over its ridge polygons of distance-from-
    // centroid x ridge area, distances measured inside the facet hyperplane.
    for (int a = 0; a < m; ++a) {
      const auto& ids = facet_verts[static_cast<std::size_t>(a)];
      if (static_cast<int>(ids.size()) < n) continue;
      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
      for (int id : ids) centroid += ve.verts.col(id);
      centroid /= static_cast<double>(ids.size());
      double vol3 = 0.0;
      for (const auto& [ri, rvol] : ridge_of_facet[static_cast<std::size_t>(a)]) {
        const RidgeData& rd = ridges[static_cast<std::size_t>(ri)];
        const int other = (rd.facet_a == a) ? rd.facet_b : rd.facet_a;
        Eigen::VectorXd w = u.col(other) - u.col(other).dot(u.col(a)) * u.col(a);
        const double wn = w.norm();
        if (wn < 1e-12) continue;
        w /= wn;
        const double dist = std::abs(w.dot(ve.verts.col(rd.vertex_ids[0]) - centroid));
        vol3 += dist * rvol;
      }
      area[a] = vol3 / 3.0;
    }
  }

  // Fold antipodal facets, split active/inactive, assemble.
  const double total_area = area.sum();
  std::vector<int> keep;           // canonical indices kept
  std::vector<int> full_remap(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < k; ++i) {
    const double ai = 0.5 * (area[2 * i] + area[2 * i + 1]);
    if (ai > kInactiveAreaRel * total_area) {
      full_remap[static_cast<std::size_t>(2 * i)] = 2 * static_cast<int>(keep.size());
      full_remap[static_cast<std::size_t>(2 * i + 1)] = 2 * static_cast<int>(keep.size()) + 1;
      keep.push_back(i);
    }
  }
  if (keep.empty()) throw DegenerateBody("wulff_shape: no facet survived");

  SymmetricPolytope p;
  p.dim_ = n;
  p.vertices_ = ve.verts;
  p.vertex_list_exact_ = true;
  const int ka = static_cast<int>(keep.size());
  p.normals_.resize(n, ka);
  p.supports_.resize(ka);
  p.facet_areas_.resize(ka);
  for (int j = 0; j < ka; ++j) {
    const int i = keep[static_cast<std::size_t>(j)];
    p.dirs_.push_back(dirs[static_cast<std::size_t>(i)]);
    p.normals_.col(j) = dirs[static_cast<std::size_t>(i)].coords();
    p.supports_[j] = sup[static_cast<std::size_t>(i)];
    p.facet_areas_[j] = 0.5 * (area[2 * i] + area[2 * i + 1]);
  }
  const int dropped = k - ka;
  p.inactive_normals_.resize(n, dropped);
  p.inactive_supports_.resize(dropped);
  {
    int c = 0;
    for (int i = 0; i < k; ++i) {
      if (full_remap[static_cast<std::size_t>(2 * i)] < 0) {
        p.inactive_normals_.col(c) = dirs[static_cast<std::size_t>(i)].coords();
        p.inactive_supports_[c] = sup[static_cast<std::size_t>(i)];
        ++c;
      }
    }
  }
  p.facet_vertex_ids_.resize(static_cast<std::size_t>(2 * ka));
  for (int a = 0; a < m; ++a) {
    const int na = full_remap[static_cast<std::size_t>(a)];
    if (na >= 0) p.facet_vertex_ids_[static_cast<std::size_t>(na)] = facet_verts[static_cast<std::size_t>(a)];
  }
  for (const auto& rd : ridges) {
    const int na = full_remap[static_cast<std::size_t>(rd.facet_a)];
    const int nb = full_remap[static_cast<std::size_t>(rd.facet_b)];
    if (na < 0 || nb < 0) continue;
    RidgeData nr = rd;
    nr.facet_a = na;
    nr.facet_b = nb;
    p.ridges_.push_back(std::move(nr));
  }
  p.volume_ = (2.0 / n) * p.supports_.dot(p.facet_areas_);
  if (!(p.volume_ > 0.0) || !std::isfinite(p.volume_)) {
    throw DegenerateBody("wulff_shape: nonpositive volume");
  }
  return p;
}

SymmetricPolytope detail_make_interval(double half_length) {
  if (!(half_length > 0.0)) throw DegenerateBody("interval: nonpositive half-length");
  SymmetricPolytope p;
  p.dim_ = 1;
  p.dirs_.emplace_back(Eigen::VectorXd::Ones(1));
  p.normals_ = Eigen::MatrixXd::Ones(1, 1);
  p.supports_ = Eigen::VectorXd::Constant(1, half_length);
  p.facet_areas_ = Eigen::VectorXd::Ones(1);  // counting measure at the endpoints
  p.vertices_.resize(1, 2);
  p.vertices_ << half_length, -half_length;
  p.facet_vertex_ids_ = {{0}, {1}};
  p.volume_ = 2.0 * half_length;
  p.inactive_normals_.resize(1, 0);
  p.inactive_supports_.resize(0);
  return p;
}

SymmetricPolytope detail_from_precomputed(int dim, std::vector<Direction> dirs,
                                          Eigen::VectorXd supports,
                                          Eigen::VectorXd areas,
                                          Eigen::MatrixXd support_points,
                                          double volume, bool vertex_list_exact) {
  SymmetricPolytope p;
  p.dim_ = dim;
  p.normals_ = directions_as_matrix(dirs);
  p.dirs_ = std::move(dirs);
  p.supports_ = std::move(supports);
  p.facet_areas_ = std::move(areas);
  p.vertices_ = std::move(support_points);
  p.volume_ = volume;
  p.vertex_list_exact_ = vertex_list_exact;
  p.facet_vertex_ids_.resize(2 * p.dirs_.size());
  p.inactive_normals_.resize(dim, 0);
  p.inactive_supports_.resize(0);
  return p;
}

EvenDiscreteMeasure surface_area_measure(const SymmetricPolytope& p) {
  return EvenDiscreteMeasure(p.normal_directions(), p.facet_areas());
}

EvenDiscreteMeasure cone_volume_measure(const SymmetricPolytope& p) {
  Eigen::VectorXd w =
      (p.supports().array() * p.facet_areas().array() / p.dim()).matrix();
  return EvenDiscreteMeasure(p.normal_directions(), w);
}

double support_value(const SymmetricPolytope& p, const Eigen::VectorXd& v) {
  if (v.size() != p.dim()) throw DimensionMismatch("support_value: dimension mismatch");
  return (p.vertices().transpose() * v).cwiseAbs().maxCoeff();
}

double mixed_volume_V1(const SymmetricPolytope& k, const SymmetricPolytope& l) {
  if (k.dim() != l.dim()) throw DimensionMismatch("mixed_volume_V1: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < k.pair_count(); ++i) {
    s += support_value(l, k.normals().col(i)) * k.facet_areas()[i];
  }
  return 2.0 * s / k.dim();
}

SymmetricPolytope project(const SymmetricPolytope& p, const Direction& u) {
  const int n = p.dim();
  if (u.dim() != n) throw DimensionMismatch("project: direction dimension mismatch");
  if (n < 2) throw DegenerateBody("project: cannot project a 1-dimensional body");
  const Eigen::MatrixXd basis = hyperplane_basis(u.coords());
  Eigen::MatrixXd pts = basis.transpose() * p.vertices();

  if (n == 2) {
    return detail_make_interval(pts.row(0).cwiseAbs().maxCoeff());
  }

  if (n == 3) {
    std::vector<int> hull = convex_hull_2d(pts);
    const int hn = static_cast<int>(hull.size());
    if (hn < 3) throw DegenerateBody("project: degenerate 2-D shadow");
    std::vector<Direction> dirs;
    Eigen::VectorXd sup(hn);
    std::vector<double> sups;
    for (int i = 0; i < hn; ++i) {
      Eigen::Vector2d a = pts.col(hull[static_cast<std::size_t>(i)]);
      Eigen::Vector2d b = pts.col(hull[static_cast<std::size_t>((i + 1) % hn)]);
      Eigen::Vector2d e = b - a;
      if (e.norm() < 1e-14) continue;
      Eigen::VectorXd nrm(2);
      nrm << e.y(), -e.x();  // outward for ccw
      dirs.emplace_back(nrm);
      sups.push_back(std::abs(nrm.normalized().dot(a)));
    }
    Eigen::VectorXd s(static_cast<Eigen::Index>(sups.size()));
    for (std::size_t i = 0; i < sups.size(); ++i) s[static_cast<Eigen::Index>(i)] = sups[i];
    return wulff_shape(dirs, s);
  }

  // n == 4: triangulated 3-D shadow hull, facets merged by plane.
  // Deduplicate projected points first; the hull is happier without
  // coincident inputs.
  std::vector<int> kept;
  const double scale = pts.cwiseAbs().maxCoeff() + 1e-30;
  for (int i = 0; i < pts.cols(); ++i) {
    bool dup = false;
    for (int j : kept) {
      if ((pts.col(i) - pts.col(j)).norm() <= 1e-10 * scale) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(i);
  }
  Eigen::MatrixXd q(3, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) q.col(static_cast<Eigen::Index>(i)) = pts.col(kept[i]);
  auto tris = convex_hull_3d(q);
  std::vector<Direction> dirs;
  std::vector<double> sups;
  for (const auto& t : tris) {
    Eigen::Vector3d a = q.col(t[0]), b2 = q.col(t[1]), c2 = q.col(t[2]);
    Eigen::Vector3d nrm = (b2 - a).cross(c2 - a);
    if (nrm.norm() < 1e-14 * scale * scale) continue;
    nrm.normalize();
    const double off = std::abs(nrm.dot(a));
    Direction d{Eigen::VectorXd(nrm)};
    int at = find_direction(dirs, d, 1e-8);
    if (at < 0) {
      dirs.push_back(d);
      sups.push_back(off);
    } else {
      sups[static_cast<std::size_t>(at)] = std::min(sups[static_cast<std::size_t>(at)], off);
    }
  }
  Eigen::VectorXd s(static_cast<Eigen::Index>(sups.size()));
  for (std::size_t i = 0; i < sups.size(); ++i) s[static_cast<Eigen::Index>(i)] = sups[i];
  return wulff_shape(dirs, s);
}

namespace {

Eigen::Vector2d rot90(const Eigen::Vector2d& v) { return {-v.y(), v.x()}; }

double support_diff_at(const SymmetricPolytope& p, const SymmetricPolytope& q,
                       const Eigen::VectorXd& v) {
  return std::abs(support_value(p, v) - support_value(q, v));
}

}  // namespace

double hausdorff_distance(const SymmetricPolytope& p, const SymmetricPolytope& q,
                          int grid_resolution) {
  if (p.dim() != q.dim()) throw DimensionMismatch("hausdorff_distance: dimension mismatch");
  const int n = p.dim();
  if (n == 1) return std::abs(p.supports()[0] - q.supports()[0]);

  double best = 0.0;
  auto eval = [&](const Eigen::VectorXd& v) {
    const double nv = v.norm();
    if (nv < 1e-14) return;
    best = std::max(best, support_diff_at(p, q, v / nv));
  };
  for (int i = 0; i < p.pair_count(); ++i) eval(p.normals().col(i));
  for (int i = 0; i < q.pair_count(); ++i) eval(q.normals().col(i));
  for (Eigen::Index i = 0; i < p.vertices().cols(); ++i) eval(p.vertices().col(i));
  for (Eigen::Index i = 0; i < q.vertices().cols(); ++i) eval(q.vertices().col(i));

  if (n == 2) {
    // Interior critical points of (h_P - h_Q) on an arc with fixed
    // supporting vertices x, y occur where the direction is orthogonal to
    // x - y; evaluating every pair makes the scan exact.
    for (Eigen::Index i = 0; i < p.vertices().cols(); ++i) {
      for (Eigen::Index j = 0; j < q.vertices().cols(); ++j) {
        Eigen::Vector2d d = p.vertices().col(i) - q.vertices().col(j);
        if (d.norm() > 1e-14) eval(rot90(d));
      }
    }
    return best;
  }

  int res = grid_resolution;
  if (res <= 0) res = (n == 3) ? 2048 : 4096;
  for (const auto& d : nested_direction_sequence(n, res)) eval(d.coords());
  return best;
}

SymmetricPolytope rotated(const SymmetricPolytope& p, const Eigen::MatrixXd& rot) {
  if (rot.rows() != p.dim() || rot.cols() != p.dim()) {
    throw DimensionMismatch("rotated: matrix dimension mismatch");
  }
  SymmetricPolytope r = p;
  for (std::size_t i = 0; i < r.dirs_.size(); ++i) {
    r.dirs_[i] = Direction(rot * p.dirs_[i].coords());
    r.normals_.col(static_cast<Eigen::Index>(i)) = r.dirs_[i].coords();
  }
  r.vertices_ = rot * p.vertices_;
  if (r.inactive_normals_.cols() > 0) r.inactive_normals_ = rot * p.inactive_normals_;
  return r;
}

SymmetricPolytope scaled(const SymmetricPolytope& p, double factor) {
  if (!(factor > 0.0)) throw DegenerateBody("scaled: factor must be positive");
  SymmetricPolytope r = p;
  const int n = p.dim();
  r.supports_ *= factor;
  r.facet_areas_ *= std::pow(factor, n - 1);
  r.vertices_ *= factor;
  r.volume_ *= std::pow(factor, n);
  r.inactive_supports_ *= factor;
  for (auto& rd : r.ridges_) rd.volume *= std::pow(factor, n - 2);
  return r;
}

}  // namespace logbm
