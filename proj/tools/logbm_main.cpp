// Command-line runner for the log-Brunn-Minkowski toolkit: Minkowski
// solves, log-Blaschke / Wulff combinations, inequality verification,
// zonotope identities, relations decompositions and randomized sweeps.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "logbm/experiment.hpp"
#include "logbm/io.hpp"
#include "logbm/random_bodies.hpp"
#include "logbm/relations.hpp"

namespace {

int log_level() {
  const char* env = std::getenv("LOGBM_LOG_LEVEL");
  if (!env) return 1;
  return std::atoi(env);
}

void print_report(const logbm::DeficitReport& r) {
  std::printf("%s,%.17g,%.17g,%.17g,%.17g,%.17g,%s\n", r.name.c_str(), r.t, r.lhs,
              r.rhs, r.deficit, r.error_budget, logbm::to_string(r.verdict).c_str());
}

std::vector<logbm::Direction> measure_directions(const std::string& path) {
  return logbm::load_measure(path).directions();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"log-Brunn-Minkowski toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  double tol = 1e-8;
  int jobs = 1;
  std::string out_dir = ".";
  app.add_option("--seed", seed, "global seed");
  app.add_option("--tol", tol, "solver tolerance");
  app.add_option("--jobs", jobs, "worker threads for sweeps");
  app.add_option("--out-dir", out_dir, "output directory");

  // minkowski-solve
  auto* solve_cmd = app.add_subcommand("minkowski-solve", "solve the discrete even Minkowski problem");
  std::string measure_path, body_out;
  solve_cmd->add_option("--measure", measure_path, "target measure JSON")->required();
  solve_cmd->add_option("--out", body_out, "output body JSON")->required();

  // combine
  auto* combine_cmd = app.add_subcommand("combine", "log-Blaschke or Wulff combination");
  std::string k0_path, k1_path, mode = "log-blaschke", combine_out;
  double t_value = 0.5;
  bool allow_intersection = false;
  combine_cmd->add_option("--k0", k0_path)->required();
  combine_cmd->add_option("--k1", k1_path)->required();
  combine_cmd->add_option("--mode", mode, "log-blaschke | wulff");
  combine_cmd->add_option("--t", t_value);
  combine_cmd->add_option("--out", combine_out)->required();
  combine_cmd->add_flag("--allow-support-intersection", allow_intersection,
                        "work on the intersection support instead of refusing mismatches");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "inequality deficits as CSV rows");
  std::string check, vk0, vk1, t_grid_str;
  verify_cmd->add_option("--check", check, "lbm|rlbm|lm|weak-rlm|proj-rlm|chain")->required();
  verify_cmd->add_option("--k0", vk0)->required();
  verify_cmd->add_option("--k1", vk1)->required();
  verify_cmd->add_option("--t-grid", t_grid_str, "comma-separated t values");

  // zonoid
  auto* zonoid_cmd = app.add_subcommand("zonoid", "zonotope identity checks");
  std::string gens_path, zcheck, zl_path;
  zonoid_cmd->add_option("--generators", gens_path)->required();
  zonoid_cmd->add_option("--check", zcheck, "sam-proj|zonoidmv|lm")->required();
  zonoid_cmd->add_option("--l", zl_path, "comparison body for lm / test function h_L");

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "relations decomposition of direction sets");
  std::string omega_path, omega_small_path;
  dec_cmd->add_option("--omega", omega_path)->required();
  dec_cmd->add_option("--omega-small", omega_small_path)->required();

  // detect-summands
  auto* det_cmd = app.add_subcommand("detect-summands", "dilated-direct-summand detection");
  std::string dk_path, dl_path;
  det_cmd->add_option("--k", dk_path)->required();
  det_cmd->add_option("--l", dl_path)->required();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "randomized experiment sweep");
  int dim = 2, pairs = 10, k_pairs = 6;
  std::string checks_str = "rlbm";
  sweep_cmd->add_option("--dim", dim, "2..4");
  sweep_cmd->add_option("--pairs", pairs, "instance count");
  sweep_cmd->add_option("--k-pairs", k_pairs, "normal pairs per body");
  sweep_cmd->add_option("--checks", checks_str, "comma-separated check list");
  sweep_cmd->add_option("--t-grid", t_grid_str, "comma-separated t values");

  CLI11_PARSE(app, argc, argv);

  auto parse_grid = [&]() {
    std::vector<double> grid;
    std::stringstream ss(t_grid_str);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) grid.push_back(std::stod(item));
    }
    return grid;
  };

  try {
    logbm::SolverOptions opts;
    opts.tol = tol;

    if (*solve_cmd) {
      auto sol = logbm::solve_even_minkowski(logbm::load_measure(measure_path), opts);
      logbm::save_body(sol.body, body_out);
      if (log_level() > 0) {
        std::fprintf(stderr, "residual=%.3e iterations=%d method=%s converged=%d\n",
                     sol.residual, sol.iterations, sol.method.c_str(),
                     static_cast<int>(sol.converged));
      }
      return sol.converged ? 0 : 2;
    }

    if (*combine_cmd) {
      auto k0 = logbm::load_body(k0_path);
      auto k1 = logbm::load_body(k1_path);
      if (mode == "log-blaschke") {
        logbm::save_body(logbm::log_blaschke(k0, k1, t_value, opts, allow_intersection),
                         combine_out);
      } else if (mode == "wulff") {
        logbm::save_body(logbm::geometric_mean_body(k0, k1, t_value).body, combine_out);
      } else {
        std::fprintf(stderr, "unknown mode '%s'\n", mode.c_str());
        return 1;
      }
      return 0;
    }

    if (*verify_cmd) {
      auto k0 = logbm::load_body(vk0);
      auto k1 = logbm::load_body(vk1);
      std::vector<double> grid = parse_grid();
      if (grid.empty()) grid = logbm::default_t_grid();
      std::printf("check,t,lhs,rhs,deficit,budget,verdict\n");
      bool violated = false;
      auto emit = [&](const logbm::DeficitReport& r) {
        print_report(r);
        violated |= r.verdict == logbm::Verdict::kViolatedBeyondBudget;
      };
      if (check == "lbm") {
        for (double t : grid) emit(logbm::lbm_deficit(k0, k1, t));
      } else if (check == "rlbm") {
        logbm::LogBlaschkePath path(k0, k1, opts);
        for (double t : grid) emit(logbm::rlbm_deficit(path, t));
      } else if (check == "chain") {
        logbm::LogBlaschkePath path(k0, k1, opts);
        for (double t : grid) {
          auto c = logbm::chain_deficits(path, t);
          emit(c.hoelder);
          emit(c.minkowski);
        }
      } else if (check == "lm") {
        emit(logbm::lm_deficit(k0, k1));
      } else if (check == "weak-rlm") {
        emit(logbm::weak_rlm_deficit(k0, k1));
      } else if (check == "proj-rlm") {
        for (const auto& u : logbm::surface_area_measure(k0).directions()) {
          emit(logbm::projection_rlm_deficit(k0, k1, u).deficit);
        }
      } else {
        std::fprintf(stderr, "unknown check '%s'\n", check.c_str());
        return 1;
      }
      return violated ? 3 : 0;
    }

    if (*zonoid_cmd) {
      auto z = logbm::load_zonotope(gens_path);
      if (zcheck == "sam-proj") {
        // Deterministic probe directions: the generator axes and a small grid.
        bool pass = true;
        for (int i = 0; i < z.generating_measure().size(); ++i) {
          auto rep = logbm::verify_sam_proj(z.body(), z.generating_measure().direction(i));
          std::printf("sam-proj,generator%d,tv=%.3e,mass=%.17g,%s\n", i, rep.tv_distance,
                      rep.total_mass, rep.pass ? "pass" : "FAIL");
          pass &= rep.pass;
        }
        return pass ? 0 : 3;
      }
      if (zcheck == "zonoidmv") {
        auto l = zl_path.empty() ? z.body() : logbm::load_body(zl_path);
        auto rep = logbm::verify_zonoidmv(
            z.body(), z, [&](const Eigen::VectorXd& v) { return logbm::support_value(l, v); });
        std::printf("zonoidmv,lhs=%.17g,rhs=%.17g,rel=%.3e,%s\n", rep.lhs, rep.rhs,
                    rep.rel_discrepancy, rep.pass ? "pass" : "FAIL");
        return rep.pass ? 0 : 3;
      }
      if (zcheck == "lm") {
        if (zl_path.empty()) {
          std::fprintf(stderr, "zonoid --check lm requires --l\n");
          return 1;
        }
        auto rep = logbm::lm_zonoid_harness(z, logbm::load_body(zl_path));
        print_report(rep.lm);
        for (const auto& pg : rep.per_generator) {
          std::printf("per-generator,u=[%s],lhs=%.17g,mid=%.17g,rhs=%.17g,%s\n",
                      [&] {
                        std::ostringstream os;
                        os << pg.u.transpose();
                        return os.str();
                      }().c_str(),
                      pg.lhs, pg.mid, pg.rhs,
                      (pg.step1_ok && pg.step2_ok) ? "pass" : "FAIL");
        }
        return rep.lm.verdict == logbm::Verdict::kViolatedBeyondBudget ? 3 : 0;
      }
      std::fprintf(stderr, "unknown zonoid check '%s'\n", zcheck.c_str());
      return 1;
    }

    if (*dec_cmd) {
      auto dec = logbm::decompose(measure_directions(omega_path),
                                  measure_directions(omega_small_path));
      nlohmann::json j;
      j["class_count"] = dec.class_count();
      for (const auto& cls : dec.classes) {
        nlohmann::json c;
        c["omega_members"] = cls.omega_members;
        c["omega_small_members"] = cls.omega_small_members;
        c["dim_V"] = cls.basis_v.cols();
        c["dim_U"] = cls.basis_u.cols();
        j["classes"].push_back(c);
      }
      std::printf("%s\n", j.dump(2).c_str());
      return 0;
    }

    if (*det_cmd) {
      auto k = logbm::load_body(dk_path);
      auto l = logbm::load_body(dl_path);
      auto cert = logbm::detect_dilated_direct_summands(k, l);
      nlohmann::json j;
      j["present"] = cert.has_value();
      if (cert) {
        j["class_count"] = cert->decomposition.class_count();
        for (int c = 0; c < cert->decomposition.class_count(); ++c) {
          nlohmann::json cls;
          cls["constant"] = cert->constants[c];
          cls["dim"] = cert->decomposition.classes[static_cast<std::size_t>(c)].basis_v.cols();
          cls["members"] = cert->decomposition.classes[static_cast<std::size_t>(c)].omega_members;
          j["classes"].push_back(cls);
        }
      }
      std::printf("%s\n", j.dump(2).c_str());
      return 0;
    }

    if (*sweep_cmd) {
      logbm::ExperimentConfig cfg;
      cfg.seed = seed;
      cfg.dimension = dim;
      cfg.pair_count = pairs;
      cfg.k_pairs = k_pairs;
      cfg.t_grid = parse_grid();
      cfg.tol = tol;
      cfg.jobs = jobs;
      cfg.out_dir = out_dir;
      std::stringstream ss(checks_str);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) cfg.checks.push_back(item);
      }
      auto summary = logbm::run_experiment(cfg);
      if (log_level() > 0) {
        std::fprintf(stderr, "wrote %s and %s (%d failed instances)\n",
                     summary.csv_path.c_str(), summary.summary_path.c_str(),
                     summary.failed_instances);
      }
      return summary.any_violation ? 3 : 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
