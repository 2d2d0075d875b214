#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "logbm/experiment.hpp"
#include "logbm/io.hpp"
#include "logbm/random_bodies.hpp"

using namespace logbm;

namespace {

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("body json round trip") {
  auto p = random_symmetric_polytope(10, 3, 6);
  const std::string path = tmp_path("logbm_body.json");
  save_body(p, path);
  auto q = load_body(path);
  CHECK(hausdorff_distance(p, q) <= 1e-9 * p.diameter());
  std::remove(path.c_str());
}

TEST_CASE("measure json round trip merges duplicates") {
  const std::string path = tmp_path("logbm_measure.json");
  {
    std::ofstream out(path);
    out << R"({"dim":2,"directions":[[1,0],[-1,0],[0,1]],"weights":[1.0,2.0,5.0]})";
  }
  auto m = load_measure(path);
  CHECK(m.size() == 2);
  CHECK(m.weight(0) == doctest::Approx(3.0));
  save_measure(m, path);
  auto m2 = load_measure(path);
  CHECK(m2.size() == 2);
  CHECK(m2.total_mass_full() == doctest::Approx(m.total_mass_full()));
  std::remove(path.c_str());
}

TEST_CASE("zonotope json round trip") {
  auto z = random_zonotope(77, 3, 5);
  const std::string path = tmp_path("logbm_zono.json");
  save_zonotope(z, path);
  auto z2 = load_zonotope(path);
  CHECK(z2.body().volume() == doctest::Approx(z.body().volume()).epsilon(1e-12));
  std::remove(path.c_str());
}

TEST_CASE("sweep: determinism, seed replay, parallel equivalence") {
  ExperimentConfig cfg;
  cfg.seed = 99;
  cfg.dimension = 2;
  cfg.pair_count = 4;
  cfg.k_pairs = 4;
  cfg.checks = {"rlbm", "lm"};
  cfg.t_grid = {0.3, 0.7};
  cfg.out_dir = tmp_path("logbm_sweep_a");
  auto s1 = run_experiment(cfg);
  const std::string csv1 = slurp(s1.csv_path);
  CHECK(csv1.find("rlbm") != std::string::npos);
  CHECK(s1.failed_instances == 0);
  CHECK_FALSE(s1.any_violation);

  // Byte-identical replay.
  cfg.out_dir = tmp_path("logbm_sweep_b");
  auto s2 = run_experiment(cfg);
  CHECK(slurp(s2.csv_path) == csv1);

  // Parallel workers produce the same bytes.
  cfg.out_dir = tmp_path("logbm_sweep_c");
  cfg.jobs = 3;
  auto s3 = run_experiment(cfg);
  CHECK(slurp(s3.csv_path) == csv1);

  // Empty check list: header only.
  cfg.checks.clear();
  cfg.jobs = 1;
  cfg.out_dir = tmp_path("logbm_sweep_d");
  auto s4 = run_experiment(cfg);
  std::string csv4 = slurp(s4.csv_path);
  CHECK(csv4.find("check,t,dim,seed") != std::string::npos);
  CHECK(csv4.find("rlbm") == std::string::npos);

  for (const auto& s : {s1, s2, s3, s4}) {
    std::filesystem::remove_all(std::filesystem::path(s.csv_path).parent_path());
  }
}

TEST_CASE("sweep rows carry the config hash header") {
  ExperimentConfig cfg;
  cfg.seed = 5;
  cfg.dimension = 2;
  cfg.pair_count = 2;
  cfg.k_pairs = 4;
  cfg.checks = {"weak-rlm"};
  cfg.out_dir = tmp_path("logbm_sweep_e");
  auto s = run_experiment(cfg);
  const std::string csv = slurp(s.csv_path);
  std::ostringstream expect;
  expect << "# config_hash=" << config_hash(cfg);
  CHECK(csv.find(expect.str()) != std::string::npos);
  std::filesystem::remove_all(std::filesystem::path(s.csv_path).parent_path());
}

TEST_CASE("supp-matched pair generator honors its contract") {
  for (int rep = 0; rep < 6; ++rep) {
    const int n = 2 + rep % 3;
    auto [k0, k1] = random_supp_matched_pair(860 + rep, n, n + 3);
    auto s0 = surface_area_measure(k0);
    auto s1 = surface_area_measure(k1);
    REQUIRE(s0.size() == s1.size());
    for (int i = 0; i < s0.size(); ++i) CHECK(s1.find(s0.direction(i)) >= 0);
  }
  // Narrow spread keeps the pair close.
  auto [a, b] = random_supp_matched_pair(4242, 2, 5, 0.05);
  CHECK(hausdorff_distance(a, b) <= 0.2 * a.diameter());
}
