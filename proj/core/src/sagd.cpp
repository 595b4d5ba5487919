#include "sdnopt/sagd.hpp"

namespace sdnopt {

trajectory sagd_run(gradient_oracle& oracle, const geometry& geom,
                    const Eigen::VectorXd& x0, const sagd_schedule& sched,
                    std::uint64_t stream_key, const run_options& opts) {
  trajectory out;
  Eigen::VectorXd x = x0;
  Eigen::VectorXd z = x0;
  std::int64_t calls = 0;

  for (int t = 1; t <= sched.k; ++t) {
    const double beta = sched.beta_at(t);
    const Eigen::VectorXd y = (1.0 - beta) * x + beta * z;

    rng_stream rng(rng_stream::derive(stream_key, static_cast<std::uint64_t>(t)));
    const auto batch = oracle.draw(rng, sched.m);
    const Eigen::VectorXd g = batch->eval(y);
    calls += sched.m;

    z = prox_step(geom, x0, z, g, sched.eta_at(t));
    x = (1.0 - beta) * x + beta * z;

    if (!x.allFinite() || !z.allFinite()) {
      out.aborted = true;
      out.abort_iteration = t;
      break;
    }
    if (opts.observer) opts.observer(t, x, calls);
    if (opts.snapshot_stride > 0 && t % opts.snapshot_stride == 0) {
      out.snapshots.push_back({t, calls, x, z});
    }
    out.iterations = t;
  }
  out.final_x = x;
  out.total_calls = calls;
  return out;
}

}  // namespace sdnopt
