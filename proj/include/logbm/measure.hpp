#ifndef LOGBM_MEASURE_HPP
#define LOGBM_MEASURE_HPP

#include <Eigen/Dense>
#include <vector>

#include "logbm/direction.hpp"

namespace logbm {

/// Even finite Borel measure on the sphere with finite support, stored as
/// canonical antipodal pairs. Each stored entry (v, w) represents mass w at
/// v AND mass w at -v, so the total mass of the underlying even measure is
/// 2 * sum(weights). Weights are strictly positive and directions are
/// pairwise distinct after canonicalization (duplicates are merged at
/// construction).
class EvenDiscreteMeasure {
 public:
  EvenDiscreteMeasure(std::vector<Direction> directions, Eigen::VectorXd weights);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(dirs_.size()); }
  const std::vector<Direction>& directions() const { return dirs_; }
  const Direction& direction(int i) const { return dirs_[static_cast<std::size_t>(i)]; }
  double weight(int i) const { return weights_[i]; }
  const Eigen::VectorXd& weights() const { return weights_; }

  /// Mass of the full (antipodally expanded) measure: 2 * sum of weights.
  double total_mass_full() const { return 2.0 * weights_.sum(); }

  /// Whether the support spans R^dim. Required for Minkowski solvability
  /// and zonotope construction; enforced by those call sites, not here
  /// (projection-lifted measures legitimately live in a hyperplane).
  bool spans_ambient(double tol = 1e-9) const;

  int find(const Direction& v, double tol = 1e-9) const {
    return find_direction(dirs_, v, tol);
  }

  EvenDiscreteMeasure scaled(double factor) const;

 private:
  int dim_;
  std::vector<Direction> dirs_;
  Eigen::VectorXd weights_;
};

/// Total-variation distance between the full (antipodally expanded)
/// measures: sum over the union of supports of |a(v) - b(v)|, counting both
/// members of each pair.
double total_variation_distance(const EvenDiscreteMeasure& a,
                                const EvenDiscreteMeasure& b,
                                double dir_tol = 1e-9);

}  // namespace logbm

#endif  // LOGBM_MEASURE_HPP
