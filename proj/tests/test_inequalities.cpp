#include <doctest.h>

#include <cmath>

#include "logbm/inequalities.hpp"
#include "logbm/random_bodies.hpp"
#include "logbm/relations.hpp"
#include "logbm/sphere.hpp"

using namespace logbm;

namespace {

Direction dir(std::initializer_list<double> coords) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(coords.size()));
  int i = 0;
  for (double c : coords) v[i++] = c;
  return Direction(v);
}

SymmetricPolytope box2(double a, double b) {
  return wulff_shape({dir({1, 0}), dir({0, 1})}, Eigen::Vector2d(a, b));
}

SymmetricPolytope cube3() {
  return wulff_shape({dir({1, 0, 0}), dir({0, 1, 0}), dir({0, 0, 1})},
                     Eigen::Vector3d(1, 1, 1));
}

SymmetricPolytope diamond2() {
  const double s = 1.0 / std::sqrt(2.0);
  return wulff_shape({dir({s, s}), dir({s, -s})}, Eigen::Vector2d(s, s));
}

SymmetricPolytope octahedron3() {
  const double s = 1.0 / std::sqrt(3.0);
  std::vector<Direction> normals;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-1.0, 1.0}) normals.push_back(dir({a, b, 1.0}));
  }
  return wulff_shape(normals, Eigen::VectorXd::Constant(4, s));
}

}  // namespace

TEST_CASE("lbm deficit") {
  auto sq = box2(1, 1);
  auto r0 = lbm_deficit(sq, sq, 0.5);
  CHECK(std::abs(r0.deficit) <= r0.error_budget + 1e-8);

  // Dilates: V(K_t) = 4 4^t equals the volume product exactly.
  auto r1 = lbm_deficit(sq, scaled(sq, 2.0), 0.3);
  CHECK(r1.deficit <= r1.error_budget + 1e-8 * r1.rhs);
  CHECK(r1.deficit >= -1e-8 * r1.rhs);

  // Square vs diamond at t = 1/2: strictly positive.
  auto r2 = lbm_deficit(sq, diamond2(), 0.5, 512);
  CHECK(r2.deficit > 1e-3);
  CHECK(r2.verdict == Verdict::kSatisfied);
}

TEST_CASE("rlbm deficit: equality families and the planar theorem") {
  // Parallelotopes with parallel sides: equality at every t.
  LogBlaschkePath rects(box2(1, 1), box2(4, 9));
  for (double t : {0.2, 0.5, 0.8}) {
    auto r = rlbm_deficit(rects, t);
    CHECK(std::abs(r.deficit) <= 1e-6 * std::max(r.lhs, r.rhs));
    CHECK(r.verdict == Verdict::kEqualityWithinTol);
  }
  // Dilates.
  auto k = random_symmetric_polytope(8080, 2, 5);
  LogBlaschkePath dil(k, scaled(k, 2.0));
  auto r = rlbm_deficit(dil, 0.4);
  CHECK(std::abs(r.deficit) <= 1e-6 * std::max(r.lhs, r.rhs));

  // Random supp-matched planar pairs: the section-3 theorem.
  for (int rep = 0; rep < 12; ++rep) {
    auto [k0, k1] = random_supp_matched_pair(600 + rep, 2, 4 + rep % 3);
    LogBlaschkePath path(k0, k1);
    for (double t : {0.25, 0.5, 0.75}) {
      auto rr = rlbm_deficit(path, t);
      CHECK(rr.deficit >= -1e-8 * std::max(rr.lhs, rr.rhs));
    }
  }
}

TEST_CASE("tilde vs wulff deficit") {
  auto sq = box2(1, 1);
  LogBlaschkePath same(sq, sq);
  auto r0 = tilde_vs_wulff_deficit(same, 0.5);
  CHECK(std::abs(r0.deficit.deficit) <= r0.deficit.error_budget + 1e-8);

  // Square vs diamond (supports match: both are supported on the corner
  // normals after construction? they are not; use supp-matched random pair).
  auto [k0, k1] = random_supp_matched_pair(777, 2, 5);
  LogBlaschkePath path(k0, k1);
  auto r1 = tilde_vs_wulff_deficit(path, 0.5);
  CHECK(r1.deficit.deficit >= -r1.deficit.error_budget - 1e-8 * r1.deficit.rhs);
  REQUIRE(r1.containment.has_value());
  CHECK(r1.containment->pass);
  CHECK(r1.containment->projection_pass);

  // Rectangle pair: equality within budget.
  LogBlaschkePath rects(box2(1, 1), box2(4, 9));
  auto r2 = tilde_vs_wulff_deficit(rects, 0.5);
  CHECK(std::abs(r2.deficit.deficit) <= r2.deficit.error_budget + 1e-6 * r2.deficit.rhs);
}

TEST_CASE("containment check: equality structure for rectangles") {
  LogBlaschkePath rects(box2(1, 1), box2(4, 9));
  auto rep = containment_check_2d(rects, 0.5);
  CHECK(rep.pass);
  CHECK(rep.projection_pass);
  // Equality at the axis directions.
  auto tilde = rects.body_at(0.5);
  for (int axis = 0; axis < 2; ++axis) {
    Eigen::Vector2d v = Eigen::Vector2d::Zero();
    v[axis] = 1.0;
    const double gm = std::pow(support_value(rects.endpoint0(), v), 0.5) *
                      std::pow(support_value(rects.endpoint1(), v), 0.5);
    CHECK(support_value(tilde, v) == doctest::Approx(gm).epsilon(1e-8));
  }
  // Strict inequality at the diagonal.
  Eigen::Vector2d diag(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
  const double gm = std::pow(support_value(rects.endpoint0(), diag), 0.5) *
                    std::pow(support_value(rects.endpoint1(), diag), 0.5);
  CHECK(gm - support_value(tilde, diag) > 1e-3);
}

TEST_CASE("lm deficit: dilates and the square/diamond value") {
  auto sq = box2(1, 1);
  auto r0 = lm_deficit(sq, sq);
  CHECK(std::abs(r0.deficit) <= 1e-12);
  auto r1 = lm_deficit(sq, scaled(sq, 3.0));
  CHECK(std::abs(r1.deficit) <= 1e-10);

  // K = square, L = diamond: lhs 0, rhs 2 log(1/2), deficit 2 log 2.
  auto r2 = lm_deficit(sq, diamond2());
  CHECK(r2.lhs == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r2.rhs == doctest::Approx(2.0 * std::log(0.5)));
  CHECK(r2.deficit == doctest::Approx(2.0 * std::log(2.0)));
}

TEST_CASE("lm deficit scaling invariance in L") {
  auto k = random_symmetric_polytope(909, 3, 6);
  auto l = random_symmetric_polytope(910, 3, 6);
  const double d0 = lm_deficit(k, l).deficit;
  for (double c : {0.5, 2.0, 7.0}) {
    CHECK(std::abs(lm_deficit(k, scaled(l, c)).deficit - d0) <= 1e-10 * (1 + std::abs(d0)));
  }
}

TEST_CASE("weak reverse-lm deficit") {
  auto sq = box2(1, 1);
  CHECK(std::abs(weak_rlm_deficit(sq, sq).deficit) <= 1e-12);
  CHECK(std::abs(weak_rlm_deficit(sq, scaled(sq, 2.0)).deficit) <= 1e-10);
  // square vs [-a,a]x[-b,b]: both sides 2 log(ab).
  auto r = weak_rlm_deficit(sq, box2(2, 3));
  CHECK(r.lhs == doctest::Approx(2.0 * std::log(6.0)));
  CHECK(r.rhs == doctest::Approx(2.0 * std::log(6.0)));
  CHECK(std::abs(r.deficit) <= 1e-12);
  CHECK_THROWS_AS(weak_rlm_deficit(sq, diamond2()), SupportMismatch);
}

TEST_CASE("projection reverse-lm deficit and equality witness") {
  auto cube = cube3();
  auto u = dir({0, 0, 1});
  auto r0 = projection_rlm_deficit(cube, cube, u);
  CHECK(std::abs(r0.deficit.deficit) <= 1e-12);
  CHECK(r0.witness_constant);
  CHECK(r0.witness_value == doctest::Approx(1.0));

  auto r1 = projection_rlm_deficit(cube, scaled(cube, 2.0), u);
  CHECK(std::abs(r1.deficit.deficit) <= 1e-10);
  CHECK(r1.witness_constant);
  CHECK(r1.witness_value == doctest::Approx(4.0));  // c^{n-1}

  // cube vs box [-1,1]^2 x [-2,2] at u = e3: both projections are the same
  // square, phi = 1 on supp minus u-perp, deficit 0.
  auto box = wulff_shape({dir({1, 0, 0}), dir({0, 1, 0}), dir({0, 0, 1})},
                         Eigen::Vector3d(1, 1, 2));
  auto r2 = projection_rlm_deficit(cube, box, u);
  CHECK(std::abs(r2.deficit.lhs) <= 1e-12);
  CHECK(std::abs(r2.deficit.rhs) <= 1e-12);
  CHECK(r2.witness_constant);
  CHECK(r2.witness_value == doctest::Approx(1.0));

  // Nontrivial pair: inequality holds with slack in general.
  auto [k0, k1] = random_supp_matched_pair(112, 3, 6);
  for (int i = 0; i < k0.pair_count(); ++i) {
    auto rr = projection_rlm_deficit(k0, k1, k0.normal_direction(i));
    CHECK(rr.deficit.deficit >= -1e-8 * std::max(std::abs(rr.deficit.lhs), std::abs(rr.deficit.rhs)));
  }
}

TEST_CASE("chain deficits are nonnegative on the planar corpus") {
  for (int rep = 0; rep < 10; ++rep) {
    auto [k0, k1] = random_supp_matched_pair(2200 + rep, 2, 4 + rep % 3);
    LogBlaschkePath path(k0, k1);
    for (double t : {0.3, 0.7}) {
      auto c = chain_deficits(path, t);
      CHECK(c.hoelder.deficit >= -c.hoelder.error_budget - 1e-8 * c.hoelder.lhs);
      CHECK(c.minkowski.deficit >= -1e-8 * std::abs(c.minkowski.lhs));
    }
  }
}

TEST_CASE("equality case scan: rectangles, dilates, perturbations") {
  auto scan = equality_case_scan(box2(1, 1), box2(4, 9), {0.25, 0.5, 0.75});
  CHECK(scan.all_equality);
  CHECK(scan.detector_present);
  CHECK(scan.detector_class_count == 2);
  CHECK(scan.findings.empty());

  auto k = random_symmetric_polytope(5110, 2, 5);
  auto scan2 = equality_case_scan(k, scaled(k, 2.0), {0.3, 0.6});
  CHECK(scan2.all_equality);
  CHECK(scan2.detector_present);
  CHECK(scan2.detector_class_count == 1);

  // Perturbed measure on one direction of a single class: no equality, no
  // detection.
  auto s = surface_area_measure(k);
  Eigen::VectorXd w = s.weights();
  w[0] *= 1.3;
  auto l = solve_even_minkowski(EvenDiscreteMeasure(s.directions(), w)).body;
  auto scan3 = equality_case_scan(k, l, {0.3, 0.6});
  CHECK_FALSE(scan3.all_equality);
  CHECK_FALSE(scan3.detector_present);
  for (const auto& r : scan3.rlbm) CHECK(r.deficit > r.error_budget);
}

TEST_CASE("deficits are invariant under simultaneous rotation") {
  std::mt19937_64 gen(99);
  auto [k0, k1] = random_supp_matched_pair(313, 3, 6);
  const double lm0 = lm_deficit(k0, k1).deficit;
  const double wr0 = weak_rlm_deficit(k0, k1).deficit;
  LogBlaschkePath p0(k0, k1);
  const double rl0 = rlbm_deficit(p0, 0.5).deficit;
  for (int rep = 0; rep < 3; ++rep) {
    auto rot = random_rotation(gen, 3);
    auto r0 = rotated(k0, rot);
    auto r1 = rotated(k1, rot);
    CHECK(lm_deficit(r0, r1).deficit == doctest::Approx(lm0).epsilon(1e-9));
    CHECK(weak_rlm_deficit(r0, r1).deficit == doctest::Approx(wr0).epsilon(1e-9));
    LogBlaschkePath pr(r0, r1);
    CHECK(rlbm_deficit(pr, 0.5).deficit == doctest::Approx(rl0).epsilon(1e-7));
  }
}

TEST_CASE("lm deficit for the zonotope base stays nonnegative") {
  // Theorem-backed sign (zonotope base); modest sample here, the large
  // corpus lives in the acceptance suite.
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + rep % 3;
    auto z = random_zonotope(4000 + rep, n, n + 2 + rep % 3);
    auto l = random_symmetric_polytope(4100 + rep, n, n + 3);
    auto r = lm_deficit(z.body(), l);
    CHECK(r.deficit >= -1e-8 * std::max({std::abs(r.lhs), std::abs(r.rhs), z.body().volume()}));
  }
  // Cube vs octahedron: deficit (8/3) log 6.
  auto r = lm_deficit(cube3(), octahedron3());
  CHECK(r.deficit == doctest::Approx(8.0 / 3.0 * std::log(6.0)).epsilon(1e-9));
}
