#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sdnopt/presets.hpp"

namespace {

namespace fs = std::filesystem;
using namespace sdnopt;

bool apply_override(experiment_spec& spec, const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos) return false;
  const std::string key = kv.substr(0, eq);
  double value = 0.0;
  try {
    value = std::stod(kv.substr(eq + 1));
  } catch (const std::exception&) {
    return false;
  }
  if (key == "L") {
    spec.overrides.L = value;
  } else if (key == "calL") {
    spec.overrides.calL = value;
  } else if (key == "sigma_star") {
    spec.overrides.sigma_star = value;
  } else if (key == "mu") {
    spec.overrides.mu = value;
  } else if (key == "kappa_lower") {
    spec.overrides.kappa_lower = value;
  } else if (key == "D") {
    spec.overrides.D = value;
  } else if (key == "Kbar") {
    spec.overrides.Kbar = value;
  } else if (key == "R0") {
    spec.overrides.R0 = value;
  } else {
    return false;
  }
  return true;
}

int cmd_run(const std::string& spec_arg, int trials, long long seed,
            const std::string& out, const std::string& format_name, bool double_count,
            const std::vector<std::string>& overrides, int threads) {
  experiment_spec spec = load_spec_or_preset(spec_arg);
  if (trials > 0) spec.trials = trials;
  if (seed >= 0) spec.seed = static_cast<std::uint64_t>(seed);
  if (double_count) spec.double_count_oracle = true;
  for (const auto& kv : overrides) {
    if (!apply_override(spec, kv)) {
      std::cerr << "error: bad --override '" << kv
                << "' (expected <const>=<value> with const in "
                   "{L, calL, sigma_star, mu, kappa_lower, D, Kbar, R0})\n";
      return 2;
    }
  }
  const emit_format format =
      format_name == "json" ? emit_format::json : emit_format::csv;
  const int workers =
      threads > 0 ? threads
                  : std::max(1u, std::thread::hardware_concurrency());

  const experiment_result res = run_experiment(spec, out, format, workers);
  for (const auto& name : res.combo_names) {
    std::cout << "wrote " << (fs::path(out) / name).string() << "\n";
  }
  if (res.failures > 0) {
    std::cerr << "error: " << res.failures << " trial(s) failed; see manifests\n";
    return 1;
  }
  return 0;
}

int cmd_aggregate(const std::string& dir, const std::string& out,
                  const std::string& format_name) {
  const auto traces = read_trials_csv((fs::path(dir) / "trials.csv").string());
  if (traces.empty()) {
    std::cerr << "error: no trials in " << dir << "\n";
    return 1;
  }
  const aggregate_trace agg = aggregate(traces);
  const emit_format format =
      format_name == "json" ? emit_format::json : emit_format::csv;
  std::string path = out;
  if (path.empty()) {
    path = (fs::path(dir) /
            (format == emit_format::csv ? "aggregate.csv" : "aggregate.json"))
               .string();
  }
  write_aggregate(path, agg, format);
  std::cout << "wrote " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Accelerated stochastic approximation under state-dependent noise"};
  app.require_subcommand(1);

  std::string spec_arg, out = "results", format_name = "csv";
  int trials = 0, threads = 0;
  long long seed = -1;
  bool double_count = false;
  std::vector<std::string> overrides;

  auto* run = app.add_subcommand("run", "run an experiment spec or preset");
  run->add_option("spec", spec_arg, "preset name, spec file path, or inline JSON")
      ->required();
  run->add_option("--trials", trials, "override the trial count");
  run->add_option("--seed", seed, "override the base seed");
  run->add_option("--out", out, "output directory (default: results)");
  run->add_option("--format", format_name, "aggregate format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_flag("--double-count-oracle", double_count,
                "black-box accounting: each evaluation point costs its own queries");
  run->add_option("--override", overrides,
                  "constant override <const>=<value>; repeatable");
  run->add_option("--threads", threads, "worker pool size (default: hardware)");

  std::string agg_dir, agg_out;
  auto* agg = app.add_subcommand("aggregate", "re-aggregate a written experiment");
  agg->add_option("dir", agg_dir, "experiment directory containing trials.csv")
      ->required();
  agg->add_option("--out", agg_out, "output file (default: <dir>/aggregate.<fmt>)");
  agg->add_option("--format", format_name, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* pre = app.add_subcommand("presets", "preset catalog");
  auto* pre_list = pre->add_subcommand("list", "list shipped presets");
  std::string show_name;
  auto* pre_show = pre->add_subcommand("show", "print a preset spec");
  pre_show->add_option("name", show_name, "preset name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(spec_arg, trials, seed, out, format_name, double_count, overrides,
                     threads);
    }
    if (agg->parsed()) return cmd_aggregate(agg_dir, agg_out, format_name);
    if (pre->parsed()) {
      if (pre_show->parsed()) {
        const preset_info* p = find_preset(show_name);
        if (!p) {
          std::cerr << "error: no preset named '" << show_name << "'\n";
          return 2;
        }
        std::cout << p->spec_json << "\n";
        return 0;
      }
      (void)pre_list;
      for (const auto& p : presets()) {
        std::printf("%-18s %s\n", p.name.c_str(), p.description.c_str());
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
