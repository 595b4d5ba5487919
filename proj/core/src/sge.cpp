#include "sdnopt/sge.hpp"

namespace sdnopt {

trajectory sge_run(gradient_oracle& oracle, const geometry& geom,
                   const Eigen::VectorXd& x0, const sge_schedule& sched,
                   std::uint64_t stream_key, const run_options& opts) {
  trajectory out;
  Eigen::VectorXd x_prev = x0;   // x_{t-1}
  Eigen::VectorXd x_prev2 = x0;  // x_{t-2}
  Eigen::VectorXd z = x0;
  std::int64_t calls = 0;

  for (int t = 1; t <= sched.k; ++t) {
    // Batch xi_{t-1}, drawn lazily at the start of iteration t.
    rng_stream rng(rng_stream::derive(stream_key, static_cast<std::uint64_t>(t)));
    const auto batch = oracle.draw(rng, sched.m);

    const double alpha = sched.alpha_at(t);
    Eigen::VectorXd g_tilde;
    if (t == 1) {
      g_tilde = batch->eval(x_prev);  // alpha_1 = 0 and x_{-1} = x_0
      calls += sched.m;
    } else {
      const Eigen::VectorXd g_new = batch->eval(x_prev);
      const Eigen::VectorXd g_old = batch->eval(x_prev2);
      g_tilde = g_new + alpha * (g_new - g_old);
      calls += opts.double_count_oracle ? 2 * static_cast<std::int64_t>(sched.m)
                                        : sched.m;
    }

    z = prox_step(geom, x0, z, g_tilde, sched.eta_at(t));
    const double beta = sched.beta_at(t);
    const Eigen::VectorXd x = (1.0 - beta) * x_prev + beta * z;

    if (!x.allFinite() || !z.allFinite()) {
      out.aborted = true;
      out.abort_iteration = t;
      out.final_x = x_prev;
      out.total_calls = calls;
      return out;
    }
    x_prev2 = x_prev;
    x_prev = x;
    if (opts.observer) opts.observer(t, x_prev, calls);
    if (opts.snapshot_stride > 0 && t % opts.snapshot_stride == 0) {
      out.snapshots.push_back({t, calls, x_prev, z});
    }
    out.iterations = t;
  }
  out.final_x = x_prev;
  out.total_calls = calls;
  return out;
}

}  // namespace sdnopt
