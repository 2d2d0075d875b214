#include "logbm/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "logbm/random_bodies.hpp"
#include "logbm/sphere.hpp"

namespace logbm {

namespace {

struct Row {
  std::string check;
  double t;
  int dim;
  std::uint64_t seed;
  double lhs, rhs, deficit, budget;
  std::string verdict;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Row to_row(const DeficitReport& r, int dim, std::uint64_t seed) {
  return {r.name, r.t, dim, seed, r.lhs, r.rhs, r.deficit, r.error_budget,
          to_string(r.verdict)};
}

std::vector<Row> run_instance(const ExperimentConfig& cfg, int index) {
  const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(index));
  std::vector<double> grid = cfg.t_grid.empty() ? default_t_grid() : cfg.t_grid;
  std::vector<Row> rows;

  auto [k0, k1] = random_supp_matched_pair(seed, cfg.dimension, cfg.k_pairs);
  SolverOptions opts;
  opts.tol = cfg.tol;
  LogBlaschkePath path(k0, k1, opts);

  for (const auto& check : cfg.checks) {
    if (check == "lbm") {
      for (double t : grid) rows.push_back(to_row(lbm_deficit(k0, k1, t), cfg.dimension, seed));
    } else if (check == "rlbm") {
      for (double t : grid) rows.push_back(to_row(rlbm_deficit(path, t), cfg.dimension, seed));
    } else if (check == "tilde-wulff") {
      for (double t : grid) {
        rows.push_back(to_row(tilde_vs_wulff_deficit(path, t).deficit, cfg.dimension, seed));
      }
    } else if (check == "chain") {
      for (double t : grid) {
        ChainReport c = chain_deficits(path, t);
        rows.push_back(to_row(c.hoelder, cfg.dimension, seed));
        rows.push_back(to_row(c.minkowski, cfg.dimension, seed));
      }
    } else if (check == "lm") {
      rows.push_back(to_row(lm_deficit(k0, k1), cfg.dimension, seed));
    } else if (check == "weak-rlm") {
      rows.push_back(to_row(weak_rlm_deficit(k0, k1), cfg.dimension, seed));
    } else if (check == "proj-rlm") {
      const auto& dirs = path.support();
      for (std::size_t ui = 0; ui < dirs.size(); ++ui) {
        auto rep = projection_rlm_deficit(k0, k1, dirs[ui]);
        Row row = to_row(rep.deficit, cfg.dimension, seed);
        row.t = static_cast<double>(ui);  // direction index, not a path parameter
        rows.push_back(row);
      }
    } else {
      throw GeometryError("run_experiment: unknown check '" + check + "'");
    }
  }
  return rows;
}

}  // namespace

std::uint64_t config_hash(const ExperimentConfig& cfg) {
  // FNV-1a over the canonical config string.
  std::string s = std::to_string(cfg.seed) + "|" + std::to_string(cfg.dimension) + "|" +
                  std::to_string(cfg.pair_count) + "|" + std::to_string(cfg.k_pairs) + "|";
  for (double t : cfg.t_grid) s += fmt(t) + ",";
  s += "|";
  for (const auto& c : cfg.checks) s += c + ",";
  s += "|" + fmt(cfg.tol);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

ExperimentSummary run_experiment(const ExperimentConfig& cfg) {
  std::vector<std::vector<Row>> buckets(static_cast<std::size_t>(cfg.pair_count));
  std::atomic<int> next{0};
  std::atomic<int> failures{0};

  auto worker = [&]() {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= cfg.pair_count) break;
      try {
        buckets[static_cast<std::size_t>(i)] = run_instance(cfg, i);
      } catch (const std::exception& e) {
        failures.fetch_add(1);
        std::cerr << "[sweep] instance " << i << " skipped: " << e.what() << "\n";
      }
    }
  };
  const int jobs = std::max(1, cfg.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<Row> rows;
  for (auto& b : buckets) {
    rows.insert(rows.end(), b.begin(), b.end());
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.check != b.check) return a.check < b.check;
    if (a.seed != b.seed) return a.seed < b.seed;
    if (a.t != b.t) return a.t < b.t || (std::isnan(b.t) && !std::isnan(a.t));
    return false;
  });

  ExperimentSummary summary;
  std::filesystem::create_directories(cfg.out_dir);
  summary.csv_path = cfg.out_dir + "/report.csv";
  summary.summary_path = cfg.out_dir + "/summary.json";

  std::ofstream csv(summary.csv_path);
  csv << "# config_hash=" << config_hash(cfg) << " tol=" << fmt(cfg.tol)
      << " equality_rel=1e-6 hard_rel=1e-8\n";
  csv << "check,t,dim,seed,lhs,rhs,deficit,budget,verdict\n";
  for (const auto& r : rows) {
    csv << r.check << "," << fmt(r.t) << "," << r.dim << "," << r.seed << ","
        << fmt(r.lhs) << "," << fmt(r.rhs) << "," << fmt(r.deficit) << ","
        << fmt(r.budget) << "," << r.verdict << "\n";
    auto& worst = summary.worst_deficit[r.check];
    if (summary.satisfied.find(r.check) == summary.satisfied.end()) {
      worst = r.deficit;
      summary.satisfied[r.check] = 0;
      summary.equality[r.check] = 0;
      summary.violated[r.check] = 0;
    }
    worst = std::min(worst, r.deficit);
    if (r.verdict == "satisfied") summary.satisfied[r.check]++;
    else if (r.verdict == "equality_within_tol") summary.equality[r.check]++;
    else summary.violated[r.check]++;
  }
  csv.close();

  summary.failed_instances = failures.load();
  for (const auto& [check, count] : summary.violated) {
    (void)check;
    if (count > 0) summary.any_violation = true;
  }

  nlohmann::json j;
  j["config_hash"] = config_hash(cfg);
  j["seed"] = cfg.seed;
  j["dimension"] = cfg.dimension;
  j["instances"] = cfg.pair_count;
  j["failed_instances"] = summary.failed_instances;
  for (const auto& [check, count] : summary.satisfied) {
    j["checks"][check]["satisfied"] = count;
    j["checks"][check]["equality_within_tol"] = summary.equality[check];
    j["checks"][check]["violated_beyond_budget"] = summary.violated[check];
    j["checks"][check]["worst_deficit"] = summary.worst_deficit[check];
  }
  std::ofstream js(summary.summary_path);
  js << j.dump(2) << "\n";
  return summary;
}

}  // namespace logbm
