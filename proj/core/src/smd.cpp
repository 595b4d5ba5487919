#include "sdnopt/smd.hpp"

#include <cmath>
#include <stdexcept>

namespace sdnopt {

sge_sr_result smd_sr(gradient_oracle& oracle, const geometry& geom,
                     const Eigen::VectorXd& y0, const stage_config& cfg,
                     std::uint64_t stream_key, const smd_options& opts) {
  cfg.validate(true);
  int N = opts.iterations_per_stage;
  if (N <= 0) N = plan_sge_sr(cfg, geom).iterations;
  const int m = std::max(1, opts.m0);
  const double eta = 2.0 * cfg.constants.L;

  sge_sr_result out;
  Eigen::VectorXd y = y0;
  std::int64_t calls = 0;
  for (int k = 1; k <= cfg.stages; ++k) {
    const std::uint64_t stage_key =
        rng_stream::derive(stream_key, {0x5ddULL, static_cast<std::uint64_t>(k)});
    Eigen::VectorXd z = y;
    Eigen::VectorXd avg = Eigen::VectorXd::Zero(y.size());
    for (int t = 1; t <= N; ++t) {
      rng_stream rng(rng_stream::derive(stage_key, static_cast<std::uint64_t>(t)));
      const auto batch = oracle.draw(rng, m);
      const Eigen::VectorXd g = batch->eval(z);
      calls += m;
      z = prox_step(geom, y, z, g, eta);
      if (!z.allFinite()) {
        throw std::runtime_error("smd_sr: non-finite iterate in stage " +
                                 std::to_string(k));
      }
      avg += (z - avg) / static_cast<double>(t);
      if (opts.observer) opts.observer(t, avg, calls);
    }
    out.y = avg;
    out.y_sparse = sparse_project(avg, cfg.s);
    if (opts.on_stage) opts.on_stage(k, out.y, out.y_sparse, calls);
    y = out.y_sparse;
  }
  out.total_calls = calls;
  return out;
}

}  // namespace sdnopt
