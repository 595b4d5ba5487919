#pragma once

#include "sdnopt/geometry.hpp"
#include "sdnopt/multistage.hpp"
#include "sdnopt/oracle.hpp"

namespace sdnopt {

// Non-accelerated comparison baseline: stage-restarted mirror descent with
// iterate averaging and hard thresholding at stage ends. Shipped for
// comparison plots only; no rate guarantees are asserted for it.
struct smd_options {
  int iterations_per_stage = 0;  // 0: reuse the SGE-SR stage length
  int m0 = 1;                    // preliminary-phase batch size
  iterate_observer observer;
  stage_observer on_stage;
};

sge_sr_result smd_sr(gradient_oracle& oracle, const geometry& geom,
                     const Eigen::VectorXd& y0, const stage_config& cfg,
                     std::uint64_t stream_key, const smd_options& opts = {});

}  // namespace sdnopt
