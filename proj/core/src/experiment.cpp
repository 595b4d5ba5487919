#include "sdnopt/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "sdnopt/sagd.hpp"
#include "sdnopt/sge.hpp"
#include "sdnopt/smd.hpp"

namespace sdnopt {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kModelLane = 0x3170de1ULL;
constexpr std::uint64_t kConstLane = 0xc0957ULL;
constexpr std::uint64_t kTrialLane = 0x7161a1ULL;

std::string algorithm_name(algorithm_kind a) {
  switch (a) {
    case algorithm_kind::sagd_sn: return "sagd_sn";
    case algorithm_kind::sagd_lp: return "sagd_lp";
    case algorithm_kind::sge: return "sge";
    case algorithm_kind::multistage_sge: return "multistage_sge";
    case algorithm_kind::sge_sr: return "sge_sr";
    case algorithm_kind::smd_baseline: return "smd_baseline";
  }
  return "?";
}

algorithm_kind algorithm_from(const std::string& s) {
  if (s == "sagd_sn") return algorithm_kind::sagd_sn;
  if (s == "sagd_lp") return algorithm_kind::sagd_lp;
  if (s == "sge") return algorithm_kind::sge;
  if (s == "multistage_sge") return algorithm_kind::multistage_sge;
  if (s == "sge_sr") return algorithm_kind::sge_sr;
  if (s == "smd_baseline") return algorithm_kind::smd_baseline;
  throw config_error("algorithm", "unknown algorithm '" + s + "'");
}

bool is_multistage(algorithm_kind a) {
  return a == algorithm_kind::multistage_sge || a == algorithm_kind::sge_sr ||
         a == algorithm_kind::smd_baseline;
}

bool is_sparse(algorithm_kind a) {
  return a == algorithm_kind::sge_sr || a == algorithm_kind::smd_baseline;
}

std::string compact_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// ---- spec parsing -------------------------------------------------------

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "name", "algorithm", "n", "s", "geometry", "oracle", "regressors",
      "regressor_dof", "noise", "noise_dof", "sigma", "alpha", "cov_min", "cov_max",
      "xstar", "trials", "seed", "horizon", "stages", "batch", "smd_m0", "smd_iters",
      "checkpoints", "checkpoint_unit", "double_count_oracle", "probe_samples",
      "override_L", "override_calL", "override_sigma_star", "override_mu",
      "override_kappa_lower", "override_D", "override_Kbar", "override_R0"};
  return keys;
}

template <typename T>
T get_or(const ordered_json& j, const std::string& key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const std::exception&) {
    throw config_error(key, "invalid value type");
  }
}

std::vector<double> get_number_list(const ordered_json& j, const std::string& key,
                                    std::vector<double> fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  std::vector<double> out;
  try {
    if (v.is_array()) {
      for (const auto& e : v) out.push_back(e.get<double>());
    } else {
      out.push_back(v.get<double>());
    }
  } catch (const std::exception&) {
    throw config_error(key, "expected a number or an array of numbers");
  }
  if (out.empty()) throw config_error(key, "empty list");
  return out;
}

std::optional<double> get_opt(const ordered_json& j, const std::string& key) {
  if (!j.contains(key)) return std::nullopt;
  try {
    return j.at(key).get<double>();
  } catch (const std::exception&) {
    throw config_error(key, "invalid value type");
  }
}

}  // namespace

void experiment_spec::validate() const {
  if (n < 1) throw config_error("n", "must be >= 1");
  if (trials < 1) throw config_error("trials", "must be >= 1");
  if (checkpoints < 1) throw config_error("checkpoints", "must be >= 1");
  if (batch < 0) throw config_error("batch", "must be >= 0 (0 = corollary formula)");
  if (!(cov_min > 0.0)) throw config_error("cov_min", "must be > 0");
  if (cov_max < cov_min) throw config_error("cov_max", "must be >= cov_min");
  for (double v : sigma) {
    if (v < 0.0) throw config_error("sigma", "must be >= 0");
  }
  for (double v : alpha) {
    if (!(v > 0.0 && v <= 1.0)) throw config_error("alpha", "must lie in (0, 1]");
  }
  if (is_multistage(algorithm)) {
    if (stages < 1) throw config_error("stages", "must be >= 1");
  } else {
    const int min_horizon =
        (algorithm == algorithm_kind::sagd_sn || algorithm == algorithm_kind::sagd_lp)
            ? 2
            : 1;
    if (horizon < min_horizon) {
      throw config_error("horizon", "must be >= " + std::to_string(min_horizon));
    }
  }
  if (is_sparse(algorithm)) {
    if (s < 1) throw config_error("s", "sparsity level required for this algorithm");
    if (s > n) throw config_error("s", "must be <= n");
  }
  if (s < 0 || s > n) throw config_error("s", "must lie in [0, n]");
  if (regressors == regressor_kind::student && regressor_dof < 3) {
    throw config_error("regressor_dof", "must be >= 3");
  }
  if (noise == noise_kind::student && noise_dof < 3) {
    throw config_error("noise_dof", "must be >= 3");
  }
  if (oracle == oracle_kind::exact) {
    for (double a : alpha) {
      if (a != 1.0) throw config_error("oracle", "exact oracle requires alpha = 1");
    }
    if (regressors != regressor_kind::gaussian) {
      throw config_error("oracle", "exact oracle requires gaussian regressors");
    }
  }
  if (probe_samples < 100) throw config_error("probe_samples", "must be >= 100");
  if (smd_m0 < 1) throw config_error("smd_m0", "must be >= 1");
  if (smd_iters < 0) throw config_error("smd_iters", "must be >= 0 (0 = default)");
  if (geometry_choice == geometry_kind::lp && n < 3) {
    throw config_error("geometry", "lp geometry requires n >= 3");
  }
}

experiment_spec parse_spec_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw config_error("<document>", std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw config_error("<document>", "top level must be an object");
  for (const auto& item : j.items()) {
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
      throw config_error(item.key(), "unknown key");
    }
  }
  if (!j.contains("algorithm")) throw config_error("algorithm", "required");
  if (!j.contains("n")) throw config_error("n", "required");

  experiment_spec s;
  s.name = get_or<std::string>(j, "name", "");
  s.algorithm = algorithm_from(get_or<std::string>(j, "algorithm", ""));
  s.n = get_or<int>(j, "n", 0);
  s.s = get_or<int>(j, "s", 0);
  if (j.contains("geometry")) {
    const auto g = get_or<std::string>(j, "geometry", "");
    if (g == "euclidean") {
      s.geometry_choice = geometry_kind::euclidean;
    } else if (g == "lp") {
      s.geometry_choice = geometry_kind::lp;
    } else {
      throw config_error("geometry", "expected 'euclidean' or 'lp'");
    }
  }
  if (j.contains("oracle")) {
    const auto o = get_or<std::string>(j, "oracle", "");
    if (o == "glr") {
      s.oracle = oracle_kind::glr;
    } else if (o == "exact") {
      s.oracle = oracle_kind::exact;
    } else {
      throw config_error("oracle", "expected 'glr' or 'exact'");
    }
  }
  if (j.contains("regressors")) {
    const auto r = get_or<std::string>(j, "regressors", "");
    if (r == "gaussian") {
      s.regressors = regressor_kind::gaussian;
    } else if (r == "student") {
      s.regressors = regressor_kind::student;
    } else {
      throw config_error("regressors", "expected 'gaussian' or 'student'");
    }
  }
  s.regressor_dof = get_or<int>(j, "regressor_dof", s.regressor_dof);
  if (j.contains("noise")) {
    const auto nk = get_or<std::string>(j, "noise", "");
    if (nk == "gaussian") {
      s.noise = noise_kind::gaussian;
    } else if (nk == "student") {
      s.noise = noise_kind::student;
    } else {
      throw config_error("noise", "expected 'gaussian' or 'student'");
    }
  }
  s.noise_dof = get_or<int>(j, "noise_dof", s.noise_dof);
  s.sigma = get_number_list(j, "sigma", s.sigma);
  s.alpha = get_number_list(j, "alpha", s.alpha);
  s.cov_min = get_or<double>(j, "cov_min", s.cov_min);
  s.cov_max = get_or<double>(j, "cov_max", s.cov_max);
  if (j.contains("xstar")) {
    const auto x = get_or<std::string>(j, "xstar", "");
    if (x == "gaussian") {
      s.xstar_choice = xstar_kind::gaussian;
    } else if (x == "sparse_gaussian") {
      s.xstar_choice = xstar_kind::sparse_gaussian;
    } else if (x == "ones") {
      s.xstar_choice = xstar_kind::ones;
    } else {
      throw config_error("xstar", "expected 'gaussian', 'sparse_gaussian' or 'ones'");
    }
  }
  s.trials = get_or<int>(j, "trials", s.trials);
  s.seed = get_or<std::uint64_t>(j, "seed", s.seed);
  s.horizon = get_or<int>(j, "horizon", s.horizon);
  s.stages = get_or<int>(j, "stages", s.stages);
  s.batch = get_or<int>(j, "batch", s.batch);
  s.smd_m0 = get_or<int>(j, "smd_m0", s.smd_m0);
  s.smd_iters = get_or<int>(j, "smd_iters", s.smd_iters);
  s.checkpoints = get_or<int>(j, "checkpoints", s.checkpoints);
  if (j.contains("checkpoint_unit")) {
    const auto u = get_or<std::string>(j, "checkpoint_unit", "");
    if (u == "calls") {
      s.unit = checkpoint_unit::calls;
    } else if (u == "iterations") {
      s.unit = checkpoint_unit::iterations;
    } else {
      throw config_error("checkpoint_unit", "expected 'calls' or 'iterations'");
    }
  }
  s.double_count_oracle = get_or<bool>(j, "double_count_oracle", false);
  s.probe_samples = get_or<int>(j, "probe_samples", s.probe_samples);
  s.overrides.L = get_opt(j, "override_L");
  s.overrides.calL = get_opt(j, "override_calL");
  s.overrides.sigma_star = get_opt(j, "override_sigma_star");
  s.overrides.mu = get_opt(j, "override_mu");
  s.overrides.kappa_lower = get_opt(j, "override_kappa_lower");
  s.overrides.D = get_opt(j, "override_D");
  s.overrides.Kbar = get_opt(j, "override_Kbar");
  s.overrides.R0 = get_opt(j, "override_R0");
  s.validate();
  return s;
}

experiment_spec load_spec(const std::string& path_or_text) {
  const auto first = path_or_text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && path_or_text[first] == '{') {
    return parse_spec_text(path_or_text);
  }
  std::ifstream in(path_or_text, std::ios::binary);
  if (!in) throw config_error("<path>", "cannot open spec file " + path_or_text);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str());
}

// ---- resolution ---------------------------------------------------------

namespace {

Eigen::VectorXd build_xstar(const experiment_spec& spec, xstar_kind kind,
                            rng_stream& rng) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(spec.n);
  switch (kind) {
    case xstar_kind::ones:
      x.setOnes();
      break;
    case xstar_kind::gaussian:
      for (int i = 0; i < spec.n; ++i) x[i] = rng.gaussian();
      break;
    case xstar_kind::sparse_gaussian: {
      if (spec.s < 1) throw config_error("xstar", "sparse ground truth requires s >= 1");
      std::vector<int> idx(spec.n);
      for (int i = 0; i < spec.n; ++i) idx[i] = i;
      for (int i = 0; i < spec.s; ++i) {
        const int j = i + static_cast<int>(rng.next_u64() % (spec.n - i));
        std::swap(idx[i], idx[j]);
        x[idx[i]] = rng.gaussian();
      }
      break;
    }
  }
  return x;
}

}  // namespace

run_config resolve_run(const experiment_spec& spec, double sigma, double alpha) {
  spec.validate();
  run_config rc;
  rc.spec = spec;
  rc.spec.sigma = {sigma};
  rc.spec.alpha = {alpha};
  rc.sigma = sigma;
  rc.alpha = alpha;

  const geometry_kind gk = spec.geometry_choice.value_or(
      is_sparse(spec.algorithm) ? geometry_kind::lp : geometry_kind::euclidean);
  rc.geom = gk == geometry_kind::euclidean ? geometry::euclidean(spec.n)
                                           : geometry::lp(spec.n);

  rng_stream model_rng(rng_stream::derive(spec.seed, kModelLane));
  const xstar_kind xk = spec.xstar_choice.value_or(
      spec.s > 0 ? xstar_kind::sparse_gaussian : xstar_kind::gaussian);
  rc.model.xstar = build_xstar(spec, xk, model_rng);
  rc.model.sigma_diag.resize(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    rc.model.sigma_diag[i] =
        spec.n == 1 ? spec.cov_min
                    : spec.cov_min + (spec.cov_max - spec.cov_min) * i / (spec.n - 1.0);
  }
  rc.model.regressors = spec.regressors;
  rc.model.regressor_dof = spec.regressor_dof;
  rc.model.noise = spec.noise;
  rc.model.noise_dof = spec.noise_dof;
  rc.model.noise_sigma = sigma;
  rc.model.alpha = alpha;
  rc.model.validate();
  rc.x0 = Eigen::VectorXd::Zero(spec.n);

  constant_overrides ov = spec.overrides;
  if (spec.oracle == oracle_kind::exact) {
    // the oracle is noiseless; its noise constants are identically zero
    ov.calL = 0.0;
    ov.sigma_star = 0.0;
    ov.Kbar = 0.0;
  } else if (spec.algorithm != algorithm_kind::sagd_lp && !ov.Kbar) {
    ov.Kbar = 0.0;  // only the lp SAGD stepsize reads Kbar; skip its probe
  }
  rng_stream const_rng(rng_stream::derive(spec.seed, kConstLane));
  rc.constants = estimate_constants(rc.model, rc.geom, rc.x0, const_rng, ov,
                                    spec.probe_samples);
  rc.R0 = spec.overrides.R0.value_or(norm(rc.geom, rc.x0 - rc.model.xstar));

  switch (spec.algorithm) {
    case algorithm_kind::sagd_sn:
    case algorithm_kind::sagd_lp: {
      const auto variant = spec.algorithm == algorithm_kind::sagd_sn ? sagd_variant::sn
                                                                     : sagd_variant::lp;
      rc.batch = spec.batch > 0 ? spec.batch
                                : sagd_auto_batch(rc.constants, spec.horizon, variant);
      rc.eta = sagd_eta(rc.constants, spec.horizon, rc.batch, variant);
      rc.total_calls = static_cast<std::int64_t>(spec.horizon) * rc.batch;
      rc.total_iterations = spec.horizon;
      break;
    }
    case algorithm_kind::sge: {
      rc.batch =
          spec.batch > 0 ? spec.batch : sge_auto_batch(rc.constants, spec.horizon);
      rc.eta = sge_eta(rc.constants, spec.horizon, rc.batch);
      const std::int64_t m = rc.batch;
      rc.total_calls = spec.double_count_oracle
                           ? m * (2 * static_cast<std::int64_t>(spec.horizon) - 1)
                           : m * spec.horizon;
      rc.total_iterations = spec.horizon;
      break;
    }
    case algorithm_kind::multistage_sge:
    case algorithm_kind::sge_sr: {
      stage_config sc{rc.R0, spec.stages, rc.constants, spec.s};
      rc.plan = spec.algorithm == algorithm_kind::multistage_sge
                    ? plan_multistage(sc, rc.geom, spec.batch)
                    : plan_sge_sr(sc, rc.geom, spec.batch);
      rc.total_calls = rc.plan.total_calls(spec.double_count_oracle);
      rc.total_iterations =
          static_cast<std::int64_t>(rc.plan.iterations) * spec.stages;
      break;
    }
    case algorithm_kind::smd_baseline: {
      stage_config sc{rc.R0, spec.stages, rc.constants, spec.s};
      const int per_stage =
          spec.smd_iters > 0 ? spec.smd_iters : plan_sge_sr(sc, rc.geom).iterations;
      rc.plan.iterations = per_stage;
      rc.plan.batch.assign(spec.stages, spec.smd_m0);
      rc.plan.eta.assign(spec.stages, 2.0 * rc.constants.L);
      for (int k = 1; k <= spec.stages; ++k) {
        rc.plan.radius.push_back(rc.R0 * std::pow(2.0, -0.5 * k));
      }
      rc.total_calls = static_cast<std::int64_t>(per_stage) * spec.smd_m0 * spec.stages;
      rc.total_iterations = static_cast<std::int64_t>(per_stage) * spec.stages;
      break;
    }
  }

  const std::int64_t units =
      spec.unit == checkpoint_unit::calls ? rc.total_calls : rc.total_iterations;
  rc.grid = make_grid(units, spec.checkpoints);
  return rc;
}

std::vector<run_config> expand(const experiment_spec& spec) {
  spec.validate();
  std::vector<run_config> out;
  const bool multi = spec.sigma.size() > 1 || spec.alpha.size() > 1;
  for (double a : spec.alpha) {
    for (double s : spec.sigma) {
      run_config rc = resolve_run(spec, s, a);
      rc.name = spec.name.empty() ? algorithm_name(spec.algorithm) : spec.name;
      if (multi) {
        rc.name += "-alpha" + compact_number(a) + "-sigma" + compact_number(s);
      }
      out.push_back(std::move(rc));
    }
  }
  return out;
}

// ---- execution ----------------------------------------------------------

namespace {

std::unique_ptr<gradient_oracle> make_oracle(const run_config& cfg) {
  if (cfg.spec.oracle == oracle_kind::exact) {
    const glr_model model = cfg.model;
    return std::make_unique<exact_oracle>(
        [model](const Eigen::VectorXd& x) { return true_grad_linear_gaussian(model, x); });
  }
  return std::make_unique<glr_oracle>(cfg.model);
}

error_trace run_one_trial(const run_config& cfg, int trial) {
  const auto oracle = make_oracle(cfg);
  const std::uint64_t trial_key =
      rng_stream::derive(cfg.spec.seed, {kTrialLane, static_cast<std::uint64_t>(trial)});

  const bool with_fgap = cfg.model.linear_gaussian();
  const double err0 = (cfg.x0 - cfg.model.xstar).norm();
  trace_recorder rec(cfg.grid, err0,
                     with_fgap ? fgap_linear_gaussian(cfg.model, cfg.x0) : -1.0);

  std::int64_t iteration_count = 0;
  const bool by_calls = cfg.spec.unit == checkpoint_unit::calls;
  auto record_point = [&](const Eigen::VectorXd& x, std::int64_t calls) {
    const std::int64_t unit = by_calls ? calls : iteration_count;
    rec.record(unit, (x - cfg.model.xstar).norm(),
               with_fgap ? fgap_linear_gaussian(cfg.model, x) : -1.0);
  };
  iterate_observer observer = [&](int, const Eigen::VectorXd& x, std::int64_t calls) {
    ++iteration_count;
    record_point(x, calls);
  };
  stage_observer on_stage = [&](int, const Eigen::VectorXd&,
                                const Eigen::VectorXd& y_sparse, std::int64_t calls) {
    record_point(y_sparse, calls);
  };

  std::int64_t reported_calls = 0;
  switch (cfg.spec.algorithm) {
    case algorithm_kind::sagd_sn:
    case algorithm_kind::sagd_lp: {
      const auto sched = sagd_schedule::make(cfg.spec.horizon, cfg.batch, cfg.eta,
                                             cfg.constants.L);
      run_options opts;
      opts.observer = observer;
      const trajectory tr = sagd_run(*oracle, cfg.geom, cfg.x0, sched, trial_key, opts);
      if (tr.aborted) {
        throw std::runtime_error("non-finite iterate at iteration " +
                                 std::to_string(tr.abort_iteration));
      }
      reported_calls = tr.total_calls;
      break;
    }
    case algorithm_kind::sge: {
      const auto sched =
          sge_schedule::make(cfg.spec.horizon, cfg.batch, cfg.eta, cfg.constants.L);
      run_options opts;
      opts.observer = observer;
      opts.double_count_oracle = cfg.spec.double_count_oracle;
      const trajectory tr = sge_run(*oracle, cfg.geom, cfg.x0, sched, trial_key, opts);
      if (tr.aborted) {
        throw std::runtime_error("non-finite iterate at iteration " +
                                 std::to_string(tr.abort_iteration));
      }
      reported_calls = tr.total_calls;
      break;
    }
    case algorithm_kind::multistage_sge: {
      stage_config sc{cfg.R0, cfg.spec.stages, cfg.constants, cfg.spec.s};
      multistage_options opts;
      opts.observer = observer;
      opts.double_count_oracle = cfg.spec.double_count_oracle;
      opts.batch_override = cfg.spec.batch;
      multistage_sge(*oracle, cfg.geom, cfg.x0, sc, trial_key, opts);
      reported_calls = cfg.total_calls;
      break;
    }
    case algorithm_kind::sge_sr: {
      stage_config sc{cfg.R0, cfg.spec.stages, cfg.constants, cfg.spec.s};
      multistage_options opts;
      opts.observer = observer;
      opts.on_stage = on_stage;
      opts.double_count_oracle = cfg.spec.double_count_oracle;
      opts.batch_override = cfg.spec.batch;
      const auto res = sge_sr(*oracle, cfg.geom, cfg.x0, sc, trial_key, opts);
      reported_calls = res.total_calls;
      break;
    }
    case algorithm_kind::smd_baseline: {
      stage_config sc{cfg.R0, cfg.spec.stages, cfg.constants, cfg.spec.s};
      smd_options opts;
      opts.iterations_per_stage = cfg.plan.iterations;
      opts.m0 = cfg.spec.smd_m0;
      opts.observer = observer;
      opts.on_stage = on_stage;
      const auto res = smd_sr(*oracle, cfg.geom, cfg.x0, sc, trial_key, opts);
      reported_calls = res.total_calls;
      break;
    }
  }

  // Cross-check the trajectory bookkeeping against the oracle's own count of
  // drawn observations (they differ on purpose under black-box accounting).
  if (!cfg.spec.double_count_oracle &&
      oracle->observations_drawn() != reported_calls) {
    throw std::logic_error("oracle call accounting mismatch: drawn " +
                           std::to_string(oracle->observations_drawn()) +
                           ", reported " + std::to_string(reported_calls));
  }
  return rec.finish();
}

}  // namespace

trial_set run_trials(const run_config& cfg, int workers) {
  const int trials = cfg.spec.trials;
  std::vector<error_trace> traces(trials);
  std::vector<std::string> errors(trials);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
      try {
        traces[i] = run_one_trial(cfg, i);
      } catch (const std::exception& e) {
        errors[i] = e.what();
        if (errors[i].empty()) errors[i] = "unknown failure";
      }
    }
  };
  const int pool = std::max(1, std::min(workers, trials));
  if (pool == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (int w = 0; w < pool; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  trial_set out;
  for (int i = 0; i < trials; ++i) {
    if (!errors[i].empty()) {
      out.failures.push_back({i, errors[i]});
    } else {
      out.traces.push_back(std::move(traces[i]));
    }
  }
  return out;
}

trial_set run_trials(const experiment_spec& spec, int workers) {
  if (spec.sigma.size() != 1 || spec.alpha.size() != 1) {
    throw config_error("sigma", "multiple combinations; use run_experiment");
  }
  return run_trials(resolve_run(spec, spec.sigma[0], spec.alpha[0]), workers);
}

// ---- output -------------------------------------------------------------

namespace {

ordered_json manifest_json(const run_config& cfg, const trial_set& ts) {
  const experiment_spec& s = cfg.spec;
  ordered_json m;
  m["name"] = cfg.name;
  m["algorithm"] = algorithm_name(s.algorithm);
  m["n"] = s.n;
  m["s"] = s.s;
  m["geometry"] = cfg.geom.kind == geometry_kind::euclidean ? "euclidean" : "lp";
  m["oracle"] = s.oracle == oracle_kind::exact ? "exact" : "glr";
  m["regressors"] = s.regressors == regressor_kind::gaussian ? "gaussian" : "student";
  if (s.regressors == regressor_kind::student) m["regressor_dof"] = s.regressor_dof;
  m["noise"] = s.noise == noise_kind::gaussian ? "gaussian" : "student";
  if (s.noise == noise_kind::student) m["noise_dof"] = s.noise_dof;
  m["sigma"] = cfg.sigma;
  m["alpha"] = cfg.alpha;
  m["cov_min"] = s.cov_min;
  m["cov_max"] = s.cov_max;
  m["trials"] = s.trials;
  m["seed"] = s.seed;
  m["batch"] = s.batch;
  m["checkpoints"] = s.checkpoints;
  m["checkpoint_unit"] = s.unit == checkpoint_unit::calls ? "calls" : "iterations";
  m["double_count_oracle"] = s.double_count_oracle;
  ordered_json c;
  c["L"] = cfg.constants.L;
  c["calL"] = cfg.constants.calL;
  c["sigma_star"] = cfg.constants.sigma_star;
  c["mu"] = cfg.constants.mu;
  c["kappa_lower"] = cfg.constants.kappa_lower;
  c["D"] = cfg.constants.D;
  c["Kbar"] = cfg.constants.Kbar;
  m["constants"] = c;
  m["R0"] = cfg.R0;
  m["omega_bound"] = cfg.geom.omega_bound;
  if (is_multistage(s.algorithm)) {
    m["stages"] = s.stages;
    m["stage_iterations"] = cfg.plan.iterations;
    m["stage_batch"] = cfg.plan.batch;
    m["stage_eta"] = cfg.plan.eta;
    m["stage_radius"] = cfg.plan.radius;
  } else {
    m["horizon"] = s.horizon;
    m["resolved_batch"] = cfg.batch;
    m["eta"] = cfg.eta;
  }
  m["total_calls"] = cfg.total_calls;
  m["total_iterations"] = cfg.total_iterations;
  ordered_json fails = ordered_json::array();
  for (const auto& f : ts.failures) {
    fails.push_back({{"trial", f.trial}, {"message", f.message}});
  }
  m["failures"] = fails;
  return m;
}

}  // namespace

experiment_result run_experiment(const experiment_spec& spec, const std::string& out_dir,
                                 emit_format format, int workers) {
  namespace fs = std::filesystem;
  experiment_result result;
  for (const run_config& cfg : expand(spec)) {
    const trial_set ts = run_trials(cfg, workers);
    result.failures += static_cast<int>(ts.failures.size());
    result.combo_names.push_back(cfg.name);

    const fs::path dir = fs::path(out_dir) / cfg.name;
    fs::create_directories(dir);
    {
      std::ofstream mf(dir / "manifest.json", std::ios::binary);
      if (!mf) throw std::runtime_error("cannot write manifest in " + dir.string());
      mf << manifest_json(cfg, ts).dump(2) << '\n';
    }
    if (!ts.traces.empty()) {
      write_aggregate((dir / (format == emit_format::csv ? "aggregate.csv"
                                                         : "aggregate.json"))
                          .string(),
                      aggregate(ts.traces), format);
      write_trials_csv((dir / "trials.csv").string(), ts.traces);
    }
  }
  return result;
}

}  // namespace sdnopt
