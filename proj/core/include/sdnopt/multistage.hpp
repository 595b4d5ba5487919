#pragma once

#include "sdnopt/geometry.hpp"
#include "sdnopt/oracle.hpp"
#include "sdnopt/schedule.hpp"
#include "sdnopt/trajectory.hpp"

namespace sdnopt {

// Keep the s largest-magnitude entries, zero the rest. Ties break toward
// the lower index; any tie-break attains the same l2 distance.
Eigen::VectorXd sparse_project(const Eigen::VectorXd& x, int s);

struct stage_config {
  double R0 = 0.0;  // initial radius bound in the geometry norm
  int stages = 1;   // K
  problem_constants constants;
  int s = 0;  // sparsity level, sge_sr only

  void validate(bool sparse) const;
};

// Per-stage schedule derived from the printed formulas; exposed so the
// harness can plan call budgets before running.
struct stage_plan {
  int iterations = 0;  // N
  std::vector<int> batch;       // m^k, one per stage
  std::vector<double> eta;      // eta base, one per stage
  std::vector<double> radius;   // R_k = R0 2^{-k/2}
  std::int64_t total_calls(bool double_count) const;
};

// batch_override > 0 pins every stage batch to that value (the m0 knob of
// the comparison plots); the stage eta formula then uses the pinned batch.
stage_plan plan_multistage(const stage_config& cfg, const geometry& geom,
                           int batch_override = 0);
stage_plan plan_sge_sr(const stage_config& cfg, const geometry& geom,
                       int batch_override = 0);

// Sample stream of stage k (1-based) within a multi-stage run; stable under
// changes to the stage count, so stage-level replays are exact.
std::uint64_t stage_stream_key(std::uint64_t run_key, int stage);

// Called at the end of each stage. For plain restarts y_sparse == y.
using stage_observer = std::function<void(
    int stage, const Eigen::VectorXd& y, const Eigen::VectorXd& y_sparse,
    std::int64_t cumulative_calls)>;

struct multistage_options {
  iterate_observer observer;       // forwarded to every inner SGE run
  stage_observer on_stage;         // optional
  bool double_count_oracle = false;
  int batch_override = 0;          // see plan_* above
};

// Restarted SGE under quadratic growth: stage k runs N iterations of SGE
// from the previous stage output with the stage's eta and batch size.
Eigen::VectorXd multistage_sge(gradient_oracle& oracle, const geometry& geom,
                               const Eigen::VectorXd& y0, const stage_config& cfg,
                               std::uint64_t stream_key,
                               const multistage_options& opts = {});

struct sge_sr_result {
  Eigen::VectorXd y;         // last un-thresholded stage output
  Eigen::VectorXd y_sparse;  // s-sparse final output
  std::int64_t total_calls = 0;
  bool aborted = false;
};

// Sparse recovery variant: each stage ends with hard thresholding of the
// stage output, which also seeds the next stage.
sge_sr_result sge_sr(gradient_oracle& oracle, const geometry& geom,
                     const Eigen::VectorXd& y0, const stage_config& cfg,
                     std::uint64_t stream_key, const multistage_options& opts = {});

}  // namespace sdnopt
