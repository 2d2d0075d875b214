#include "logbm/measure.hpp"

#include <cmath>
#include <utility>

namespace logbm {

EvenDiscreteMeasure::EvenDiscreteMeasure(std::vector<Direction> directions,
                                         Eigen::VectorXd weights) {
  if (directions.empty()) {
    throw GeometryError("EvenDiscreteMeasure: empty support");
  }
  if (static_cast<Eigen::Index>(directions.size()) != weights.size()) {
    throw DimensionMismatch("EvenDiscreteMeasure: direction/weight count mismatch");
  }
  dim_ = directions[0].dim();
  for (const auto& d : directions) {
    if (d.dim() != dim_) {
      throw DimensionMismatch("EvenDiscreteMeasure: mixed ambient dimensions");
    }
  }
  // Merge duplicates (same canonical axis) and validate positivity.
  for (std::size_t i = 0; i < directions.size(); ++i) {
    const double w = weights[static_cast<Eigen::Index>(i)];
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw GeometryError("EvenDiscreteMeasure: weights must be positive and finite");
    }
    int at = find_direction(dirs_, directions[i]);
    if (at >= 0) {
      weights_[at] += w;
    } else {
      dirs_.push_back(directions[i]);
      weights_.conservativeResize(weights_.size() + 1);
      weights_[weights_.size() - 1] = w;
    }
  }
}

bool EvenDiscreteMeasure::spans_ambient(double tol) const {
  return directions_span(dirs_, dim_, tol);
}

EvenDiscreteMeasure EvenDiscreteMeasure::scaled(double factor) const {
  if (!(factor > 0.0)) {
    throw GeometryError("EvenDiscreteMeasure::scaled: factor must be positive");
  }
  return EvenDiscreteMeasure(dirs_, weights_ * factor);
}

double total_variation_distance(const EvenDiscreteMeasure& a,
                                const EvenDiscreteMeasure& b, double dir_tol) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("total_variation_distance: dimension mismatch");
  }
  double tv = 0.0;
  std::vector<bool> used_b(static_cast<std::size_t>(b.size()), false);
  for (int i = 0; i < a.size(); ++i) {
    int j = b.find(a.direction(i), dir_tol);
    if (j >= 0) {
      used_b[static_cast<std::size_t>(j)] = true;
      tv += std::abs(a.weight(i) - b.weight(j));
    } else {
      tv += a.weight(i);
    }
  }
  for (int j = 0; j < b.size(); ++j) {
    if (!used_b[static_cast<std::size_t>(j)]) tv += b.weight(j);
  }
  return 2.0 * tv;  // both members of every antipodal pair
}

}  // namespace logbm
