#include "logbm/direction.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace logbm {

namespace {
constexpr double kZeroCoordTol = 1e-10;
}

Direction::Direction(Eigen::VectorXd v) : v_(std::move(v)) {
  const double norm = v_.norm();
  if (!(norm > kZeroCoordTol)) {
    throw DegenerateBody("Direction: cannot normalize a (near-)zero vector");
  }
  v_ /= norm;
  // Canonical antipodal representative: flip so the first coordinate of
  // magnitude > 1e-10 is positive. A unit vector in R^n (n <= small) always
  // has a coordinate of magnitude >= 1/sqrt(n), so the pivot exists.
  for (Eigen::Index i = 0; i < v_.size(); ++i) {
    if (std::abs(v_[i]) > kZeroCoordTol) {
      if (v_[i] < 0.0) v_ = -v_;
      break;
    }
  }
}

bool Direction::same_axis(const Direction& o, double tol) const {
  if (o.dim() != dim()) return false;
  return std::abs(dot(o)) >= 1.0 - tol;
}

int find_direction(const std::vector<Direction>& dirs, const Direction& v,
                   double tol) {
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (dirs[i].same_axis(v, tol)) return static_cast<int>(i);
  }
  return -1;
}

bool directions_span(const std::vector<Direction>& dirs, int dim, double tol) {
  if (static_cast<int>(dirs.size()) < dim) return false;
  Eigen::MatrixXd m = directions_as_matrix(dirs);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.rank() >= dim && svd.singularValues()(dim - 1) > tol;
}

Eigen::MatrixXd directions_as_matrix(const std::vector<Direction>& dirs) {
  if (dirs.empty()) return Eigen::MatrixXd();
  Eigen::MatrixXd m(dirs[0].dim(), static_cast<Eigen::Index>(dirs.size()));
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    m.col(static_cast<Eigen::Index>(i)) = dirs[i].coords();
  }
  return m;
}

}  // namespace logbm
