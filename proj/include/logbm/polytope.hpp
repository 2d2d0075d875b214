#ifndef LOGBM_POLYTOPE_HPP
#define LOGBM_POLYTOPE_HPP

#include <Eigen/Dense>
#include <vector>

#include "logbm/direction.hpp"
#include "logbm/measure.hpp"

namespace logbm {

/// An (n-2)-dimensional face shared by two facets, with enough data for
/// volume derivatives: dArea(facet_a)/dh(facet_b) = volume / sin(angle).
/// Facet indices are "full": facet 2i is the one with outward normal
/// +normal(i), facet 2i+1 its antipode.
struct RidgeData {
  int facet_a = -1;
  int facet_b = -1;
  double volume = 0.0;           // (n-2)-volume; 1 in dimension 2
  std::vector<int> vertex_ids;   // columns of vertices() on the ridge
};

/// Origin-symmetric convex polytope in halfspace representation
///   P = { x : |normal_i . x| <= support_i }.
/// Only canonical (antipodal-representative) normals are stored; facet data
/// for -normal_i mirrors facet i. Construction always goes through one of
/// the factory functions below, which derive vertices, facet areas, ridges
/// and volume. Instances are immutable and safe to share across threads.
class SymmetricPolytope {
 public:
  /// Default-constructed instances are empty placeholders; every populated
  /// instance comes from one of the factory functions below.
  SymmetricPolytope() = default;

  int dim() const { return dim_; }
  /// Number of stored (active) canonical normals.
  int pair_count() const { return static_cast<int>(dirs_.size()); }

  const std::vector<Direction>& normal_directions() const { return dirs_; }
  const Direction& normal_direction(int i) const { return dirs_[static_cast<std::size_t>(i)]; }
  /// dim x pair_count matrix of canonical normals.
  const Eigen::MatrixXd& normals() const { return normals_; }
  const Eigen::VectorXd& supports() const { return supports_; }
  /// (n-1)-area of the facet at each canonical normal (same for antipode).
  const Eigen::VectorXd& facet_areas() const { return facet_areas_; }
  double volume() const { return volume_; }

  /// All vertices, antipodally complete, as columns. For generator-backed
  /// bodies in dimension 4 this is a support-point cloud (its support
  /// function coincides with the body's; some points may not be extreme),
  /// flagged by vertex_list_exact() == false.
  const Eigen::MatrixXd& vertices() const { return vertices_; }
  bool vertex_list_exact() const { return vertex_list_exact_; }

  /// Vertex ids incident to full facet index a (2i = +normal_i, 2i+1 = -normal_i).
  const std::vector<std::vector<int>>& facet_vertex_ids() const { return facet_vertex_ids_; }
  const std::vector<RidgeData>& ridges() const { return ridges_; }

  /// Normals supplied at construction whose facet came out empty or below
  /// the sliver threshold; kept for provenance, not part of the body data.
  const Eigen::MatrixXd& inactive_normals() const { return inactive_normals_; }
  const Eigen::VectorXd& inactive_supports() const { return inactive_supports_; }

  Eigen::VectorXd full_normal(int full_idx) const {
    Eigen::VectorXd u = normals_.col(full_idx / 2);
    return (full_idx % 2 == 0) ? u : Eigen::VectorXd(-u);
  }
  double diameter() const { return 2.0 * max_vertex_norm(); }
  double max_vertex_norm() const;

 private:
  friend SymmetricPolytope wulff_shape(const std::vector<Direction>&,
                                       const Eigen::VectorXd&);
  friend SymmetricPolytope detail_make_interval(double);
  friend SymmetricPolytope detail_from_precomputed(
      int, std::vector<Direction>, Eigen::VectorXd, Eigen::VectorXd,
      Eigen::MatrixXd, double, bool);
  friend SymmetricPolytope rotated(const SymmetricPolytope&, const Eigen::MatrixXd&);
  friend SymmetricPolytope scaled(const SymmetricPolytope&, double);

  int dim_ = 0;
  std::vector<Direction> dirs_;
  Eigen::MatrixXd normals_;       // dim x k
  Eigen::VectorXd supports_;      // k
  Eigen::VectorXd facet_areas_;   // k
  Eigen::MatrixXd vertices_;      // dim x nv
  bool vertex_list_exact_ = true;
  std::vector<std::vector<int>> facet_vertex_ids_;  // 2k entries
  std::vector<RidgeData> ridges_;
  Eigen::MatrixXd inactive_normals_;
  Eigen::VectorXd inactive_supports_;
  double volume_ = 0.0;
};

/// Wulff shape (aleksandrov body) of positive support numbers over a
/// spanning set of canonical directions:
///   P = intersection of { x : |normal_i . x| <= support_i }.
/// Duplicate normals are merged keeping the binding (smallest) support.
/// Normals whose facet has (n-1)-area below 1e-12 x (total surface area)
/// are recorded as inactive. Throws DegenerateBody when the normals fail
/// to span (unbounded intersection).
SymmetricPolytope wulff_shape(const std::vector<Direction>& normals,
                              const Eigen::VectorXd& supports);

/// Surface area measure S_P: weight at each canonical normal equals the
/// facet's (n-1)-area.
EvenDiscreteMeasure surface_area_measure(const SymmetricPolytope& p);

/// Cone volume measure V_P: weight (1/n) h_i area_i; full mass = volume.
EvenDiscreteMeasure cone_volume_measure(const SymmetricPolytope& p);

/// Support function h_P(v) = max over vertices of |x . v| (v need not be
/// normalized; the result is 1-homogeneous and even in v).
double support_value(const SymmetricPolytope& p, const Eigen::VectorXd& v);

/// First mixed volume V1(K, L) = (1/n) integral of h_L dS_K.
double mixed_volume_V1(const SymmetricPolytope& k, const SymmetricPolytope& l);

/// Orthogonal projection onto u^perp, returned as an (n-1)-dimensional body
/// in the deterministic hyperplane_basis(u) coordinates.
SymmetricPolytope project(const SymmetricPolytope& p, const Direction& u);

/// sup |h_P - h_Q|. Exact in dimension 2 (the critical directions of the
/// support difference of two polygons form a finite computable set); in
/// higher dimensions evaluated over both normal sets, both vertex direction
/// sets and a quasi-uniform grid, hence a lower bound that is exact when
/// the grid contains the refined normal fan's extreme directions.
double hausdorff_distance(const SymmetricPolytope& p, const SymmetricPolytope& q,
                          int grid_resolution = 0);

SymmetricPolytope rotated(const SymmetricPolytope& p, const Eigen::MatrixXd& rot);
SymmetricPolytope scaled(const SymmetricPolytope& p, double factor);

/// 1-dimensional body [-half_length, half_length] (projection target).
SymmetricPolytope detail_make_interval(double half_length);

/// Assembly from externally computed facet data (zonotope fast path).
SymmetricPolytope detail_from_precomputed(int dim, std::vector<Direction> dirs,
                                          Eigen::VectorXd supports,
                                          Eigen::VectorXd areas,
                                          Eigen::MatrixXd support_points,
                                          double volume, bool vertex_list_exact);

}  // namespace logbm

#endif  // LOGBM_POLYTOPE_HPP
