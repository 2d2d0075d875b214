#ifndef LOGBM_DIRECTION_HPP
#define LOGBM_DIRECTION_HPP

#include <Eigen/Dense>
#include <vector>

#include "logbm/errors.hpp"

namespace logbm {

/// Unit vector on S^{n-1} stored by its canonical antipodal representative:
/// the first coordinate of magnitude above 1e-10 is made positive, so v and
/// -v always map to the same object. All even data (surface area measures,
/// facet normals of origin-symmetric bodies) is stored on canonical
/// directions only; the antipode is implicit.
class Direction {
 public:
  /// Normalizes and canonicalizes. Throws DegenerateBody on a (near-)zero
  /// input vector.
  explicit Direction(Eigen::VectorXd v);

  const Eigen::VectorXd& coords() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()); }

  double dot(const Eigen::VectorXd& x) const { return v_.dot(x); }
  double dot(const Direction& o) const { return v_.dot(o.v_); }

  /// True when the two directions agree as axes, i.e. |u.v| >= 1 - tol.
  bool same_axis(const Direction& o, double tol = 1e-9) const;

 private:
  Eigen::VectorXd v_;
};

/// Index of the first entry of `dirs` on the same axis as `v`, or -1.
int find_direction(const std::vector<Direction>& dirs, const Direction& v,
                   double tol = 1e-9);

/// Rank check: do the directions span R^dim (tolerance on singular values)?
bool directions_span(const std::vector<Direction>& dirs, int dim,
                     double tol = 1e-9);

/// Stacks direction coordinates as columns of a dim x k matrix.
Eigen::MatrixXd directions_as_matrix(const std::vector<Direction>& dirs);

}  // namespace logbm

#endif  // LOGBM_DIRECTION_HPP
