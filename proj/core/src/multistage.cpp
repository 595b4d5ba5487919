#include "sdnopt/multistage.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sdnopt/sge.hpp"

namespace sdnopt {

Eigen::VectorXd sparse_project(const Eigen::VectorXd& x, int s) {
  const int n = static_cast<int>(x.size());
  if (s < 1 || s > n) throw std::invalid_argument("sparse_project: s out of range");
  if (s == n) return x;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::nth_element(idx.begin(), idx.begin() + s, idx.end(), [&x](int a, int b) {
    const double ma = std::abs(x[a]), mb = std::abs(x[b]);
    return ma != mb ? ma > mb : a < b;
  });
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < s; ++j) out[idx[j]] = x[idx[j]];
  return out;
}

void stage_config::validate(bool sparse) const {
  if (!(R0 > 0.0)) throw std::invalid_argument("stage_config: R0 must be > 0");
  if (stages < 1) throw std::invalid_argument("stage_config: stage count must be >= 1");
  constants.validate();
  if (!(constants.L > 0.0)) throw std::invalid_argument("stage_config: L must be > 0");
  if (sparse) {
    if (s < 1) throw std::invalid_argument("stage_config: sparsity level s unset");
    if (!(constants.kappa_lower > 0.0)) {
      throw std::invalid_argument("stage_config: kappa_lower must be > 0");
    }
  } else if (!(constants.mu > 0.0)) {
    throw std::invalid_argument("stage_config: mu must be > 0");
  }
}

std::int64_t stage_plan::total_calls(bool double_count) const {
  std::int64_t total = 0;
  for (int m : batch) {
    const std::int64_t mm = m;
    // Black-box accounting pays per evaluation point; the first iteration of
    // a stage evaluates a single point.
    total += double_count ? mm * (2 * iterations - 1) : mm * iterations;
  }
  return total;
}

namespace {

stage_plan build_plan(const stage_config& cfg, const geometry& geom, int iterations,
                      int batch_override) {
  const problem_constants& c = cfg.constants;
  stage_plan plan;
  plan.iterations = iterations;
  const double N = static_cast<double>(iterations);
  const double omega_bound = geom.omega_bound;
  for (int k = 1; k <= cfg.stages; ++k) {
    const double rk = cfg.R0 * std::pow(2.0, -0.5 * k);
    int m = batch_override;
    if (m <= 0) {
      const double m_state = std::ceil(3.0 * c.calL * (N + 2.0) / c.L);
      const double m_noise = std::ceil(8.0 * N * (N + 2.0) * (N + 2.0) * c.sigma_star *
                                       c.sigma_star /
                                       (9.0 * omega_bound * c.L * c.L * rk * rk));
      const double md = std::max({1.0, m_state, m_noise});
      if (md > 1e9) throw std::runtime_error("stage plan: batch size exceeds 1e9");
      m = static_cast<int>(md);
    }
    const double eta =
        std::max({schedule_constants::sge_eta_floor * c.L,
                  schedule_constants::sge_state_term * (N + 2.0) * c.calL / m,
                  c.sigma_star / rk *
                      std::sqrt(2.0 * std::pow(N + 1.0, 3) / (omega_bound * m))});
    plan.radius.push_back(rk);
    plan.batch.push_back(m);
    plan.eta.push_back(eta);
  }
  return plan;
}

Eigen::VectorXd run_stages(gradient_oracle& oracle, const geometry& geom,
                           const Eigen::VectorXd& y0, const stage_config& cfg,
                           const stage_plan& plan, std::uint64_t stream_key,
                           const multistage_options& opts, bool sparse,
                           sge_sr_result* sr_out) {
  Eigen::VectorXd y = y0;
  std::int64_t calls = 0;
  for (int k = 1; k <= cfg.stages; ++k) {
    const sge_schedule sched = sge_schedule::make(plan.iterations, plan.batch[k - 1],
                                                  plan.eta[k - 1], cfg.constants.L);
    run_options inner;
    inner.double_count_oracle = opts.double_count_oracle;
    if (opts.observer) {
      const std::int64_t offset = calls;
      inner.observer = [&opts, offset](int t, const Eigen::VectorXd& x,
                                       std::int64_t c) {
        opts.observer(t, x, offset + c);
      };
    }
    const std::uint64_t stage_key =
        rng_stream::derive(stream_key, {0x57a6eULL, static_cast<std::uint64_t>(k)});
    const trajectory traj = sge_run(oracle, geom, y, sched, stage_key, inner);
    calls += traj.total_calls;
    if (traj.aborted) {
      if (sr_out) {
        sr_out->aborted = true;
        sr_out->total_calls = calls;
      }
      throw std::runtime_error("multistage: non-finite iterate in stage " +
                               std::to_string(k) + ", iteration " +
                               std::to_string(traj.abort_iteration));
    }
    Eigen::VectorXd y_out = traj.final_x;
    Eigen::VectorXd y_next = sparse ? sparse_project(y_out, cfg.s) : y_out;
    if (opts.on_stage) opts.on_stage(k, y_out, y_next, calls);
    y = sparse ? y_next : y_out;
    if (sr_out && k == cfg.stages) {
      sr_out->y = y_out;
      sr_out->y_sparse = y_next;
    }
  }
  if (sr_out) sr_out->total_calls = calls;
  return y;
}

}  // namespace

stage_plan plan_multistage(const stage_config& cfg, const geometry& geom,
                           int batch_override) {
  cfg.validate(false);
  const int N = static_cast<int>(
      std::ceil(10.0 * std::sqrt(2.0 * geom.omega_bound * cfg.constants.L /
                                 cfg.constants.mu)));
  return build_plan(cfg, geom, N, batch_override);
}

stage_plan plan_sge_sr(const stage_config& cfg, const geometry& geom,
                       int batch_override) {
  cfg.validate(true);
  // N = 40 sqrt(s L Omega / kappa_lower), rounded up to an integer.
  const int N = static_cast<int>(
      std::ceil(40.0 * std::sqrt(cfg.s * cfg.constants.L * geom.omega_bound /
                                 cfg.constants.kappa_lower)));
  return build_plan(cfg, geom, N, batch_override);
}

Eigen::VectorXd multistage_sge(gradient_oracle& oracle, const geometry& geom,
                               const Eigen::VectorXd& y0, const stage_config& cfg,
                               std::uint64_t stream_key,
                               const multistage_options& opts) {
  const stage_plan plan = plan_multistage(cfg, geom, opts.batch_override);
  return run_stages(oracle, geom, y0, cfg, plan, stream_key, opts, false, nullptr);
}

sge_sr_result sge_sr(gradient_oracle& oracle, const geometry& geom,
                     const Eigen::VectorXd& y0, const stage_config& cfg,
                     std::uint64_t stream_key, const multistage_options& opts) {
  const stage_plan plan = plan_sge_sr(cfg, geom, opts.batch_override);
  sge_sr_result out;
  run_stages(oracle, geom, y0, cfg, plan, stream_key, opts, true, &out);
  return out;
}

}  // namespace sdnopt
