#ifndef LOGBM_RANDOM_BODIES_HPP
#define LOGBM_RANDOM_BODIES_HPP

#include <cstdint>
#include <utility>

#include "logbm/polytope.hpp"
#include "logbm/zonoid.hpp"

namespace logbm {

/// Random origin-symmetric polytope: k_pairs quasi-uniform normal
/// directions (re-sampled until they span), supports log-uniform in
/// [0.5, 2], Wulff shape with inactive normals pruned. The seed fully
/// determines the result. Retries a degenerate draw up to 100 times.
SymmetricPolytope random_symmetric_polytope(std::uint64_t seed, int dim, int k_pairs);

/// Pair with identical canonical surface-measure supports (the discrete
/// mutual absolute continuity hypothesis): one normal set, two independent
/// support draws, both bodies re-solved on the common active support.
/// `support_spread` scales the log-range of the second body's supports
/// around the first's (1.0 = the full [0.5, 2] range).
std::pair<SymmetricPolytope, SymmetricPolytope> random_supp_matched_pair(
    std::uint64_t seed, int dim, int k_pairs, double support_spread = 1.0);

/// Random zonotope with quasi-uniform generator directions and lengths
/// log-uniform in [0.5, 2].
Zonotope random_zonotope(std::uint64_t seed, int dim, int generator_count);

}  // namespace logbm

#endif  // LOGBM_RANDOM_BODIES_HPP
