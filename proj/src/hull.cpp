#include "logbm/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

#include "logbm/errors.hpp"

namespace logbm {

std::vector<int> convex_hull_2d(const Eigen::MatrixXd& pts, double tol) {
  const int n = static_cast<int>(pts.cols());
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (pts(0, a) != pts(0, b)) return pts(0, a) < pts(0, b);
    return pts(1, a) < pts(1, b);
  });
  const double scale = pts.cwiseAbs().maxCoeff() + 1.0;
  const double eps = tol * scale * scale;
  auto cross = [&](int o, int a, int b) {
    return (pts(0, a) - pts(0, o)) * (pts(1, b) - pts(1, o)) -
           (pts(1, a) - pts(1, o)) * (pts(0, b) - pts(0, o));
  };
  std::vector<int> hull(2 * static_cast<std::size_t>(n));
  int k = 0;
  for (int ii = 0; ii < n; ++ii) {  // lower chain
    const int i = idx[static_cast<std::size_t>(ii)];
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], i) <= eps) --k;
    hull[static_cast<std::size_t>(k++)] = i;
  }
  const int lower = k + 1;
  for (int ii = n - 2; ii >= 0; --ii) {  // upper chain
    const int i = idx[static_cast<std::size_t>(ii)];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], i) <= eps) --k;
    hull[static_cast<std::size_t>(k++)] = i;
  }
  hull.resize(static_cast<std::size_t>(std::max(0, k - 1)));
  return hull;
}

double convex_polygon_area(const Eigen::MatrixXd& pts2d) {
  const int n = static_cast<int>(pts2d.cols());
  if (n < 3) return 0.0;
  Eigen::Vector2d c = pts2d.rowwise().mean();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> ang(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ang[static_cast<std::size_t>(i)] =
        std::atan2(pts2d(1, i) - c.y(), pts2d(0, i) - c.x());
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return ang[static_cast<std::size_t>(a)] < ang[static_cast<std::size_t>(b)]; });
  double area2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const int a = order[static_cast<std::size_t>(i)];
    const int b = order[static_cast<std::size_t>((i + 1) % n)];
    area2 += pts2d(0, a) * pts2d(1, b) - pts2d(0, b) * pts2d(1, a);
  }
  return 0.5 * std::abs(area2);
}

namespace {

struct Tri {
  std::array<int, 3> v;
  Eigen::Vector3d normal;  // outward unit
  double offset;           // normal . x = offset on the plane
};

Tri make_tri(const Eigen::MatrixXd& pts, int a, int b, int c,
             const Eigen::Vector3d& interior) {
  Tri t;
  t.v = {a, b, c};
  Eigen::Vector3d pa = pts.col(a), pb = pts.col(b), pc = pts.col(c);
  Eigen::Vector3d nrm = (pb - pa).cross(pc - pa);
  const double len = nrm.norm();
  if (len > 0) nrm /= len;
  if (nrm.dot(pa - interior) < 0) {
    std::swap(t.v[1], t.v[2]);
    nrm = -nrm;
  }
  t.normal = nrm;
  t.offset = nrm.dot(pa);
  return t;
}

}  // namespace

std::vector<std::array<int, 3>> convex_hull_3d(const Eigen::MatrixXd& pts,
                                               double tol) {
  const int n = static_cast<int>(pts.cols());
  if (n < 4) throw DegenerateBody("convex_hull_3d: fewer than 4 points");
  const double scale = pts.cwiseAbs().maxCoeff() + 1e-30;
  const double eps = tol * scale;

  // Initial simplex: spread points along x, then max distance from the
  // line, then from the plane.
  int i0 = 0, i1 = 0;
  for (int i = 1; i < n; ++i) {
    if (pts(0, i) < pts(0, i0)) i0 = i;
    if (pts(0, i) > pts(0, i1)) i1 = i;
  }
  if (i0 == i1) i1 = (i0 + 1) % n;
  Eigen::Vector3d p0 = pts.col(i0), p1 = pts.col(i1);
  int i2 = -1;
  double best = eps;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d d3 = pts.col(i);
    const double d = (d3 - p0).cross(p1 - p0).norm();
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (i2 < 0) throw DegenerateBody("convex_hull_3d: points are collinear");
  Eigen::Vector3d p2 = pts.col(i2);
  Eigen::Vector3d nrm = (p1 - p0).cross(p2 - p0).normalized();
  int i3 = -1;
  best = eps;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(nrm.dot(pts.col(i) - p0));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (i3 < 0) throw DegenerateBody("convex_hull_3d: points are coplanar");

  Eigen::Vector3d interior = 0.25 * (p0 + p1 + p2 + pts.col(i3));
  std::vector<Tri> faces;
  faces.push_back(make_tri(pts, i0, i1, i2, interior));
  faces.push_back(make_tri(pts, i0, i1, i3, interior));
  faces.push_back(make_tri(pts, i0, i2, i3, interior));
  faces.push_back(make_tri(pts, i1, i2, i3, interior));

  for (int p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    const Eigen::Vector3d x = pts.col(p);
    std::vector<int> visible;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (faces[f].normal.dot(x) - faces[f].offset > eps) {
        visible.push_back(static_cast<int>(f));
      }
    }
    if (visible.empty()) continue;
    // Horizon: directed edges of visible faces whose reverse edge is not in
    // the visible set.
    std::map<std::pair<int, int>, int> edge_count;
    for (int f : visible) {
      const auto& v = faces[static_cast<std::size_t>(f)].v;
      for (int e = 0; e < 3; ++e) {
        edge_count[{v[static_cast<std::size_t>(e)], v[static_cast<std::size_t>((e + 1) % 3)]}]++;
      }
    }
    std::vector<std::pair<int, int>> horizon;
    for (const auto& [edge, cnt] : edge_count) {
      (void)cnt;
      if (edge_count.find({edge.second, edge.first}) == edge_count.end()) {
        horizon.push_back(edge);
      }
    }
    std::vector<Tri> next;
    next.reserve(faces.size());
    std::vector<bool> is_visible(faces.size(), false);
    for (int f : visible) is_visible[static_cast<std::size_t>(f)] = true;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!is_visible[f]) next.push_back(faces[f]);
    }
    for (const auto& [a, b] : horizon) {
      next.push_back(make_tri(pts, a, b, p, interior));
    }
    faces = std::move(next);
  }

  std::vector<std::array<int, 3>> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(f.v);
  return out;
}

}  // namespace logbm
