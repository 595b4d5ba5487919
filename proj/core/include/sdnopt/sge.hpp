#pragma once

#include "sdnopt/geometry.hpp"
#include "sdnopt/oracle.hpp"
#include "sdnopt/schedule.hpp"
#include "sdnopt/trajectory.hpp"

namespace sdnopt {

// Stochastic gradient extrapolation. The extrapolated estimate
//   Gt = G_{t-1}(x_{t-1}) + alpha_t (G_{t-1}(x_{t-1}) - G_{t-1}(x_{t-2}))
// reuses one drawn batch at the two latest iterates, so gradients are
// estimated at the output points themselves. With x_{-1} = x_0 and
// alpha_1 = 0 the first step uses the plain batch gradient at x0.
//
// Oracle calls count the drawn observations once per batch (gray-box
// accounting); opts.double_count_oracle switches to black-box accounting
// where each evaluation point costs a separate series of queries.
trajectory sge_run(gradient_oracle& oracle, const geometry& geom,
                   const Eigen::VectorXd& x0, const sge_schedule& sched,
                   std::uint64_t stream_key, const run_options& opts = {});

}  // namespace sdnopt
