#ifndef LOGBM_EXPERIMENT_HPP
#define LOGBM_EXPERIMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "logbm/inequalities.hpp"

namespace logbm {

/// Sweep configuration. The seed fully determines every sampled body, so
/// identical configs produce byte-identical reports (rows are assembled
/// order-independently and sorted before writing).
struct ExperimentConfig {
  std::uint64_t seed = 1;
  int dimension = 2;            // 2..4
  int pair_count = 10;          // instances
  int k_pairs = 6;              // normal pairs per body
  std::vector<double> t_grid;   // empty = default grid
  std::vector<std::string> checks;  // lbm rlbm lm weak-rlm proj-rlm chain tilde-wulff
  double tol = 1e-8;
  int jobs = 1;
  std::string out_dir = ".";
};

struct ExperimentSummary {
  std::map<std::string, int> satisfied, equality, violated;
  std::map<std::string, double> worst_deficit;
  int failed_instances = 0;
  bool any_violation = false;
  std::string csv_path, summary_path;
};

std::uint64_t config_hash(const ExperimentConfig& config);

/// Runs the sweep, writing <out_dir>/report.csv with the fixed columns
///   check,t,dim,seed,lhs,rhs,deficit,budget,verdict
/// (header comment carries the config hash and tolerances) and
/// <out_dir>/summary.json. A failing instance is logged to stderr and
/// skipped; the sweep never aborts.
ExperimentSummary run_experiment(const ExperimentConfig& config);

}  // namespace logbm

#endif  // LOGBM_EXPERIMENT_HPP
