#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdnopt/emit.hpp"
#include "sdnopt/glr.hpp"
#include "sdnopt/multistage.hpp"
#include "sdnopt/trace.hpp"

namespace sdnopt {

enum class algorithm_kind { sagd_sn, sagd_lp, sge, multistage_sge, sge_sr, smd_baseline };

enum class oracle_kind { glr, exact };

enum class xstar_kind { gaussian, sparse_gaussian, ones };

enum class checkpoint_unit { calls, iterations };

// Spec validation failures carry the offending key.
class config_error : public std::runtime_error {
 public:
  config_error(const std::string& key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// A declarative experiment description. sigma and alpha may carry several
// values; expand() yields one resolved combination per pair.
struct experiment_spec {
  std::string name;
  algorithm_kind algorithm = algorithm_kind::sge;
  int n = 0;
  int s = 0;
  std::optional<geometry_kind> geometry_choice;  // default depends on algorithm
  oracle_kind oracle = oracle_kind::glr;
  regressor_kind regressors = regressor_kind::gaussian;
  int regressor_dof = 5;
  noise_kind noise = noise_kind::gaussian;
  int noise_dof = 5;
  std::vector<double> sigma{0.1};
  std::vector<double> alpha{1.0};
  double cov_min = 1.0;
  double cov_max = 1.0;
  std::optional<xstar_kind> xstar_choice;  // default depends on s
  int trials = 50;
  std::uint64_t seed = 7240;
  int horizon = 100;
  int stages = 4;
  int batch = 0;  // 0 = corollary formula
  int smd_m0 = 1;
  int smd_iters = 0;
  int checkpoints = 100;
  checkpoint_unit unit = checkpoint_unit::calls;
  bool double_count_oracle = false;
  int probe_samples = 100000;
  constant_overrides overrides;

  void validate() const;
};

// Parses the flat key-value JSON document; unknown keys are rejected and
// range violations name the key. Accepts a file path or raw JSON text.
experiment_spec load_spec(const std::string& path_or_text);
experiment_spec parse_spec_text(const std::string& text);

// One resolved (sigma, alpha) combination with everything derived: model,
// geometry, constants and the checkpoint grid.
struct run_config {
  std::string name;
  experiment_spec spec;  // with sigma/alpha collapsed to single values
  double sigma = 0.0;
  double alpha = 1.0;
  geometry geom;
  glr_model model;
  Eigen::VectorXd x0;
  problem_constants constants;
  double R0 = 0.0;
  // single-stage schedule or per-stage plan, depending on the algorithm
  int batch = 1;
  double eta = 0.0;
  stage_plan plan;
  std::int64_t total_calls = 0;
  std::int64_t total_iterations = 0;
  std::vector<std::int64_t> grid;
};

run_config resolve_run(const experiment_spec& spec, double sigma, double alpha);
std::vector<run_config> expand(const experiment_spec& spec);

struct trial_failure {
  int trial = -1;
  std::string message;
};

struct trial_set {
  std::vector<error_trace> traces;    // one per successful trial, trial order
  std::vector<trial_failure> failures;
};

// Executes the configured algorithm once per trial on a bounded worker
// pool. Output is identical for any worker count. Requires a spec that
// resolves to a single combination.
trial_set run_trials(const run_config& cfg, int workers = 1);
trial_set run_trials(const experiment_spec& spec, int workers = 1);

struct experiment_result {
  std::vector<std::string> combo_names;
  int failures = 0;
};

// Runs every combination of the spec, writing one directory per combo with
// manifest.json, aggregate.<format> and trials.csv.
experiment_result run_experiment(const experiment_spec& spec,
                                 const std::string& out_dir,
                                 emit_format format = emit_format::csv,
                                 int workers = 1);

}  // namespace sdnopt
