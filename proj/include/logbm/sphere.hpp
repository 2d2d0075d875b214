#ifndef LOGBM_SPHERE_HPP
#define LOGBM_SPHERE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "logbm/direction.hpp"

namespace logbm {

/// Fully specified uniform double in [0,1) from a mt19937_64 draw. The
/// standard <random> distributions are implementation-defined; report
/// determinism requires bit-stable sampling, so we only use the engine.
double uniform01(std::mt19937_64& gen);

/// Box-Muller standard normal built on uniform01 (bit-stable).
double gaussian(std::mt19937_64& gen);

/// Deterministic seed derivation for independent per-instance streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Prefix-nested quasi-uniform direction sequence: the first m points of
/// the sequence for any m' > m are exactly the m-point set plus new points.
/// Nesting makes outer Wulff approximations monotone under refinement.
///   dim 2: golden-angle rotation of the half-circle,
///   dim 3: van der Corput (base 2) latitude x golden-angle longitude,
///   dim >= 4: normalized Gaussian stream from a fixed internal seed.
std::vector<Direction> nested_direction_sequence(int dim, int count);

/// Quasi-uniform random directions for body sampling: Fibonacci lattice with
/// a seed-dependent rotation in dimension 3, normalized Gaussians otherwise.
std::vector<Direction> sample_directions(std::mt19937_64& gen, int dim, int count);

/// Random orthogonal matrix (Haar via QR of a Gaussian matrix).
Eigen::MatrixXd random_rotation(std::mt19937_64& gen, int dim);

/// Orthonormal basis of u^perp as the columns of a dim x (dim-1) matrix,
/// deterministic in u (Householder complement).
Eigen::MatrixXd hyperplane_basis(const Eigen::VectorXd& u);

}  // namespace logbm

#endif  // LOGBM_SPHERE_HPP
