#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

namespace sdnopt {

// Called once per iteration with the output iterate; must not mutate run
// state. Used by the harness for trace recording.
using iterate_observer =
    std::function<void(int t, const Eigen::VectorXd& x, std::int64_t cumulative_calls)>;

struct run_options {
  iterate_observer observer;  // optional
  int snapshot_stride = 0;    // 0 = keep no snapshots
  bool double_count_oracle = false;  // black-box accounting for SGE
};

struct trajectory_snapshot {
  int iteration = 0;
  std::int64_t calls = 0;
  Eigen::VectorXd x;
  Eigen::VectorXd z;
};

struct trajectory {
  Eigen::VectorXd final_x;
  int iterations = 0;
  std::int64_t total_calls = 0;
  bool aborted = false;       // a non-finite iterate appeared
  int abort_iteration = -1;
  std::vector<trajectory_snapshot> snapshots;
};

}  // namespace sdnopt
