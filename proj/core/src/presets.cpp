#include "sdnopt/presets.hpp"

namespace sdnopt {

// Desk-scale stand-ins for the full-size sparse-recovery benchmarks. The
// sparse presets pin calL (and zero sigma_star) instead of probing them:
// the pinned value plays the role of the preliminary-phase batch size m0 of
// the comparison plots, keeping the stage batch formula within a desk
// budget. multistage-desk runs entirely from probed constants.
const std::vector<preset_info>& presets() {
  static const std::vector<preset_info> table = {
      {"sge-desk", "single-stage SGE, n=50, conditioned diagonal covariance",
       R"({
  "name": "sge-desk",
  "algorithm": "sge",
  "n": 50,
  "cov_min": 1.0, "cov_max": 10.0,
  "sigma": 0.1,
  "trials": 10,
  "horizon": 60,
  "batch": 8,
  "checkpoints": 100,
  "seed": 7101
})"},
      {"fig4-desk",
       "SGE-SR sweep over activations {1, 1/2, 1/10} and noise {0.1, 0.001}, n=2000",
       R"({
  "name": "fig4-desk",
  "algorithm": "sge_sr",
  "n": 2000,
  "s": 10,
  "geometry": "lp",
  "sigma": [0.1, 0.001],
  "alpha": [1.0, 0.5, 0.1],
  "trials": 5,
  "stages": 4,
  "checkpoints": 60,
  "seed": 41001,
  "override_L": 1.0,
  "override_kappa_lower": 1.0,
  "override_calL": 0.0084,
  "override_sigma_star": 0.0
})"},
      {"fig4-desk-heavy",
       "SGE-SR sweep with Student t(5) regressors and noises, n=2000",
       R"({
  "name": "fig4-desk-heavy",
  "algorithm": "sge_sr",
  "n": 2000,
  "s": 10,
  "geometry": "lp",
  "regressors": "student", "regressor_dof": 5,
  "noise": "student", "noise_dof": 5,
  "sigma": [0.1, 0.001],
  "alpha": [1.0, 0.5, 0.1],
  "trials": 5,
  "stages": 4,
  "checkpoints": 60,
  "seed": 41002,
  "override_L": 1.67,
  "override_kappa_lower": 1.0,
  "override_calL": 0.014,
  "override_sigma_star": 0.0
})"},
      {"sgesr-desk", "SGE-SR halving check configuration, n=2000, s=10",
       R"({
  "name": "sgesr-desk",
  "algorithm": "sge_sr",
  "n": 2000,
  "s": 10,
  "geometry": "lp",
  "sigma": 0.1,
  "trials": 20,
  "stages": 5,
  "checkpoints": 60,
  "seed": 52001,
  "override_L": 1.0,
  "override_kappa_lower": 1.0,
  "override_calL": 0.0084,
  "override_sigma_star": 0.0
})"},
      {"multistage-desk",
       "restarted SGE under quadratic growth, n=100, condition number 10",
       R"({
  "name": "multistage-desk",
  "algorithm": "multistage_sge",
  "n": 100,
  "geometry": "euclidean",
  "cov_min": 1.0, "cov_max": 10.0,
  "sigma": 0.1,
  "trials": 30,
  "stages": 4,
  "checkpoints": 80,
  "seed": 63001
})"},
      {"condnum-desk",
       "SGE-SR against iteration count, n=500, condition number 10",
       R"({
  "name": "condnum-desk",
  "algorithm": "sge_sr",
  "n": 500,
  "s": 5,
  "geometry": "lp",
  "cov_min": 1.0, "cov_max": 10.0,
  "sigma": 0.001,
  "trials": 5,
  "stages": 4,
  "checkpoints": 60,
  "checkpoint_unit": "iterations",
  "seed": 74001,
  "override_L": 10.0,
  "override_kappa_lower": 1.0,
  "override_calL": 0.014,
  "override_sigma_star": 0.0
})"},
      {"noiseless-1d", "exact-gradient 1-d run backing the golden output file",
       R"({
  "name": "noiseless-1d",
  "algorithm": "sge",
  "n": 1,
  "oracle": "exact",
  "xstar": "ones",
  "sigma": 0.0,
  "trials": 3,
  "horizon": 16,
  "batch": 1,
  "checkpoints": 16,
  "seed": 85001
})"},
      {"noiseless-contract", "exact-gradient multistage run with contracting error",
       R"({
  "name": "noiseless-contract",
  "algorithm": "multistage_sge",
  "n": 20,
  "oracle": "exact",
  "xstar": "gaussian",
  "sigma": 0.0,
  "trials": 2,
  "stages": 4,
  "checkpoints": 40,
  "seed": 96001
})"},
  };
  return table;
}

const preset_info* find_preset(const std::string& name) {
  for (const auto& p : presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

experiment_spec load_spec_or_preset(const std::string& arg) {
  if (const preset_info* p = find_preset(arg)) return parse_spec_text(p->spec_json);
  return load_spec(arg);
}

}  // namespace sdnopt
