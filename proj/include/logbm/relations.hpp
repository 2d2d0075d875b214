#ifndef LOGBM_RELATIONS_HPP
#define LOGBM_RELATIONS_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "logbm/polytope.hpp"

namespace logbm {

/// One equivalence class of the relations decomposition: the members of
/// each direction set that fell into the class and orthonormal bases of
/// their spans V_i (from omega) and U_i (from omega_small).
struct DecompositionClass {
  std::vector<int> omega_members;
  std::vector<int> omega_small_members;
  Eigen::MatrixXd basis_v;  // dim x dim(V_i)
  Eigen::MatrixXd basis_u;  // dim x dim(U_i)
};

struct Decomposition {
  int dim = 0;
  std::vector<DecompositionClass> classes;
  int class_count() const { return static_cast<int>(classes.size()); }
};

/// Connected-component decomposition of the bipartite relation
/// v ~ u iff |v.u| > orth_tol between two spanning direction sets.
/// The returned classes satisfy, and are checked on every call for:
/// equal class counts on both sides, R^n = direct sum of the V_i (and of
/// the U_i), and the cross-orthogonality V_i perp U_j for i != j. A failed
/// check raises InconsistentDecomposition naming the offending pair, which
/// indicates a near-orthogonal configuration at the tolerance boundary.
Decomposition decompose(const std::vector<Direction>& omega,
                        const std::vector<Direction>& omega_small,
                        double orth_tol = 1e-9);

/// True iff the spans are a direct sum of R^dim: dimensions add to dim and
/// the stacked bases have smallest singular value above the tolerance.
bool verify_direct_sum(const std::vector<Eigen::MatrixXd>& bases, int dim,
                       double tol = 1e-9);

/// Operational reading of "K and L have dilated direct summands": there is
/// a relations decomposition of supp S_K against the witness set on which
/// phi = dS_L/dS_K is constant per class (relative tolerance 1e-7), each
/// support direction sitting in exactly one summand. Returns the
/// decomposition with the per-class constants, or nothing.
struct SummandCertificate {
  Decomposition decomposition;
  Eigen::VectorXd constants;  // phi value per class
};
std::optional<SummandCertificate> detect_dilated_direct_summands(
    const SymmetricPolytope& k, const SymmetricPolytope& l,
    const std::vector<Direction>* witness_omega = nullptr,
    double phi_rel_tol = 1e-7);

}  // namespace logbm

#endif  // LOGBM_RELATIONS_HPP
