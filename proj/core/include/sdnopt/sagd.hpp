#pragma once

#include "sdnopt/geometry.hpp"
#include "sdnopt/oracle.hpp"
#include "sdnopt/schedule.hpp"
#include "sdnopt/trajectory.hpp"

namespace sdnopt {

// Stochastic accelerated gradient descent. Gradients are estimated at the
// momentum points y_t; the divergence is centered at the stage start x0.
// One fresh batch of size m per iteration; per-iteration sample streams are
// derived from stream_key.
trajectory sagd_run(gradient_oracle& oracle, const geometry& geom,
                    const Eigen::VectorXd& x0, const sagd_schedule& sched,
                    std::uint64_t stream_key, const run_options& opts = {});

}  // namespace sdnopt
