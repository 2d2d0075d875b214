#ifndef LOGBM_HULL_HPP
#define LOGBM_HULL_HPP

#include <Eigen/Dense>
#include <array>
#include <vector>

namespace logbm {

/// Indices of the convex hull of a 2-D point cloud in counter-clockwise
/// order (Andrew monotone chain). Collinear boundary points are dropped.
std::vector<int> convex_hull_2d(const Eigen::MatrixXd& pts, double tol = 1e-12);

/// Triangulated convex hull of a full-dimensional 3-D point cloud via the
/// incremental algorithm. Triangles are oriented outward. Throws
/// DegenerateBody when the cloud is not full-dimensional.
std::vector<std::array<int, 3>> convex_hull_3d(const Eigen::MatrixXd& pts,
                                               double tol = 1e-9);

/// Area of a convex polygon given as unordered extreme points in the plane
/// (angular sort around the centroid + shoelace).
double convex_polygon_area(const Eigen::MatrixXd& pts2d);

}  // namespace logbm

#endif  // LOGBM_HULL_HPP
