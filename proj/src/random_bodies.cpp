#include "logbm/random_bodies.hpp"

#include <cmath>
#include <random>

#include "logbm/minkowski.hpp"
#include "logbm/sphere.hpp"

namespace logbm {

namespace {

constexpr int kMaxRetries = 100;
const double kLogHalf = std::log(0.5);
const double kLogTwo = std::log(2.0);

Eigen::VectorXd log_uniform_supports(std::mt19937_64& gen, int k) {
  Eigen::VectorXd h(k);
  for (int i = 0; i < k; ++i) {
    h[i] = std::exp(kLogHalf + (kLogTwo - kLogHalf) * uniform01(gen));
  }
  return h;
}

std::vector<Direction> spanning_directions(std::mt19937_64& gen, int dim, int count) {
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    auto dirs = sample_directions(gen, dim, count);
    // Canonical dedupe: coincident axes would merge in the Wulff step.
    std::vector<Direction> unique;
    for (const auto& d : dirs) {
      if (find_direction(unique, d, 1e-8) < 0) unique.push_back(d);
    }
    if (static_cast<int>(unique.size()) == count && directions_span(unique, dim)) {
      return unique;
    }
  }
  throw NonSpanning("spanning_directions: could not sample a spanning set");
}

}  // namespace

SymmetricPolytope random_symmetric_polytope(std::uint64_t seed, int dim, int k_pairs) {
  if (k_pairs < dim) throw NonSpanning("random_symmetric_polytope: k_pairs < dim");
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::mt19937_64 gen(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    try {
      auto dirs = spanning_directions(gen, dim, k_pairs);
      Eigen::VectorXd h = log_uniform_supports(gen, k_pairs);
      SymmetricPolytope body = wulff_shape(dirs, h);
      if (!directions_span(body.normal_directions(), dim)) continue;
      return body;
    } catch (const DegenerateBody&) {
      continue;
    }
  }
  throw DegenerateBody("random_symmetric_polytope: retries exhausted");
}

std::pair<SymmetricPolytope, SymmetricPolytope> random_supp_matched_pair(
    std::uint64_t seed, int dim, int k_pairs, double support_spread) {
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::mt19937_64 gen(derive_seed(seed, 1000 + static_cast<std::uint64_t>(attempt)));
    try {
      auto dirs = spanning_directions(gen, dim, k_pairs);
      Eigen::VectorXd h0 = log_uniform_supports(gen, k_pairs);
      Eigen::VectorXd h1(k_pairs);
      if (support_spread >= 1.0) {
        h1 = log_uniform_supports(gen, k_pairs);
      } else {
        for (int i = 0; i < k_pairs; ++i) {
          h1[i] = h0[i] * std::exp(support_spread * kLogTwo * (2.0 * uniform01(gen) - 1.0));
        }
      }
      SymmetricPolytope b0 = wulff_shape(dirs, h0);
      SymmetricPolytope b1 = wulff_shape(dirs, h1);

      // Prune to the common active support, then re-solve both Minkowski
      // problems there so the canonical supports agree exactly.
      const auto s0 = surface_area_measure(b0);
      const auto s1 = surface_area_measure(b1);
      std::vector<Direction> common;
      std::vector<double> w0, w1;
      for (int i = 0; i < s0.size(); ++i) {
        const int j = s1.find(s0.direction(i));
        if (j >= 0) {
          common.push_back(s0.direction(i));
          w0.push_back(s0.weight(i));
          w1.push_back(s1.weight(j));
        }
      }
      if (static_cast<int>(common.size()) < dim || !directions_span(common, dim)) continue;
      Eigen::VectorXd v0 = Eigen::Map<Eigen::VectorXd>(w0.data(), static_cast<Eigen::Index>(w0.size()));
      Eigen::VectorXd v1 = Eigen::Map<Eigen::VectorXd>(w1.data(), static_cast<Eigen::Index>(w1.size()));
      MinkowskiSolution m0 = solve_even_minkowski(EvenDiscreteMeasure(common, v0));
      MinkowskiSolution m1 = solve_even_minkowski(EvenDiscreteMeasure(common, v1));
      if (!m0.converged || !m1.converged) continue;
      if (m0.body.pair_count() != static_cast<int>(common.size()) ||
          m1.body.pair_count() != static_cast<int>(common.size())) {
        continue;  // a facet collapsed during the re-solve
      }
      return {m0.body, m1.body};
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw DegenerateBody("random_supp_matched_pair: retries exhausted");
}

Zonotope random_zonotope(std::uint64_t seed, int dim, int generator_count) {
  if (generator_count < dim) throw NonSpanning("random_zonotope: too few generators");
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::mt19937_64 gen(derive_seed(seed, 2000 + static_cast<std::uint64_t>(attempt)));
    try {
      auto dirs = spanning_directions(gen, dim, generator_count);
      Eigen::MatrixXd g(dim, generator_count);
      for (int i = 0; i < generator_count; ++i) {
        g.col(i) = dirs[static_cast<std::size_t>(i)].coords() *
                   std::exp(kLogHalf + (kLogTwo - kLogHalf) * uniform01(gen));
      }
      return zonotope_from_generators(g, std::max(12, generator_count));
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw DegenerateBody("random_zonotope: retries exhausted");
}

}  // namespace logbm
