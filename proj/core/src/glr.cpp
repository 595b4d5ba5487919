#include "sdnopt/glr.hpp"

#include <cmath>
#include <stdexcept>

namespace sdnopt {

namespace {

void check_point(const glr_model& model, const Eigen::VectorXd& x, const char* what) {
  if (x.size() != model.xstar.size()) {
    throw std::invalid_argument(std::string(what) + ": query length " +
                                std::to_string(x.size()) + " != model dimension " +
                                std::to_string(model.xstar.size()));
  }
}

// Gaussian noise has unit variance before scaling by sigma; the Student
// variant is scaled by lambda = sqrt((nu-2)/nu) to match.
double draw_noise(const glr_model& model, rng_stream& rng) {
  if (model.noise_sigma == 0.0) return 0.0;
  if (model.noise == noise_kind::gaussian) return model.noise_sigma * rng.gaussian();
  const double nu = static_cast<double>(model.noise_dof);
  const double lambda = std::sqrt((nu - 2.0) / nu);
  return model.noise_sigma * lambda * rng.student_t(model.noise_dof);
}

// Single-sample gradient mean over a chunked stream of fresh draws; avoids
// materializing huge reference batches.
Eigen::VectorXd mc_mean_grad(const glr_model& model, const Eigen::VectorXd& x,
                             std::int64_t count, rng_stream& rng) {
  const int chunk = 8192;
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(model.dimension());
  std::int64_t done = 0;
  while (done < count) {
    const int m = static_cast<int>(std::min<std::int64_t>(chunk, count - done));
    const sample_batch b = draw_batch(model, m, rng);
    for (int i = 0; i < m; ++i) {
      const double r = activation(model.alpha, b.regressors.row(i).dot(x)) -
                       b.responses[i];
      acc.noalias() += b.regressors.row(i).transpose() * r;
    }
    done += m;
  }
  return acc / static_cast<double>(count);
}

Eigen::VectorXd reference_grad(const glr_model& model, const Eigen::VectorXd& x,
                               int M, rng_stream& rng) {
  if (model.linear_gaussian()) return true_grad_linear_gaussian(model, x);
  return mc_mean_grad(model, x, static_cast<std::int64_t>(M) * 10, rng);
}

// f(x) - f* along the segment from x* by quadrature of the (estimated)
// gradient; used only when no closed form is available.
double fgap_estimate(const glr_model& model, const Eigen::VectorXd& x, int M,
                     rng_stream& rng) {
  if (model.linear_gaussian()) return fgap_linear_gaussian(model, x);
  const Eigen::VectorXd d = x - model.xstar;
  const int segments = 8;  // composite Simpson, 2*segments + 1 nodes
  double acc = 0.0;
  for (int j = 0; j <= 2 * segments; ++j) {
    const double t = static_cast<double>(j) / (2.0 * segments);
    const double w = (j == 0 || j == 2 * segments) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    acc += w * mc_mean_grad(model, model.xstar + t * d, M, rng).dot(d);
  }
  return acc / (6.0 * segments);
}

}  // namespace

double activation(double alpha, double t) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("activation: alpha must lie in (0, 1]");
  }
  const double a = std::abs(t);
  if (a <= 1.0) return t;
  const double v = (std::pow(a, alpha) - 1.0) / alpha + 1.0;
  return t > 0.0 ? v : -v;
}

void glr_model::validate() const {
  if (xstar.size() < 1) throw std::invalid_argument("glr_model: empty ground truth");
  if (sigma_diag.size() != xstar.size()) {
    throw std::invalid_argument("glr_model: sigma_diag length != dimension");
  }
  if ((sigma_diag.array() <= 0.0).any()) {
    throw std::invalid_argument("glr_model: sigma_diag entries must be positive");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("glr_model: alpha must lie in (0, 1]");
  }
  if (noise_sigma < 0.0) throw std::invalid_argument("glr_model: sigma must be >= 0");
  if (regressors == regressor_kind::student && regressor_dof < 3) {
    throw std::invalid_argument("glr_model: student regressor dof must be >= 3");
  }
  if (noise == noise_kind::student && noise_dof < 3) {
    throw std::invalid_argument("glr_model: student noise dof must be >= 3");
  }
}

sample_batch draw_batch(const glr_model& model, int m, rng_stream& rng) {
  if (m < 1) throw std::invalid_argument("draw_batch: batch size must be >= 1");
  const int n = model.dimension();
  sample_batch batch;
  batch.regressors.resize(m, n);
  batch.responses.resize(m);
  const Eigen::ArrayXd root_cov = model.sigma_diag.array().sqrt();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) batch.regressors(i, j) = root_cov[j] * rng.gaussian();
    if (model.regressors == regressor_kind::student) {
      const double nu = static_cast<double>(model.regressor_dof);
      const double w = rng.chi_square(model.regressor_dof);
      batch.regressors.row(i) /= std::sqrt(w / nu);
    }
    batch.responses[i] =
        activation(model.alpha, batch.regressors.row(i).dot(model.xstar)) +
        draw_noise(model, rng);
  }
  return batch;
}

Eigen::VectorXd stoch_grad(const glr_model& model, const sample_batch& batch,
                           const Eigen::VectorXd& x) {
  check_point(model, x, "stoch_grad");
  const int m = batch.size();
  Eigen::VectorXd g = Eigen::VectorXd::Zero(x.size());
  for (int i = 0; i < m; ++i) {
    const double r = activation(model.alpha, batch.regressors.row(i).dot(x)) -
                     batch.responses[i];
    g.noalias() += batch.regressors.row(i).transpose() * r;
  }
  return g / static_cast<double>(m);
}

Eigen::VectorXd true_grad_linear_gaussian(const glr_model& model,
                                          const Eigen::VectorXd& x) {
  if (!model.linear_gaussian()) {
    throw std::logic_error(
        "true_grad_linear_gaussian: requires alpha = 1 and gaussian regressors");
  }
  check_point(model, x, "true_grad_linear_gaussian");
  return model.sigma_diag.cwiseProduct(x - model.xstar);
}

double fgap_linear_gaussian(const glr_model& model, const Eigen::VectorXd& x) {
  if (!model.linear_gaussian()) {
    throw std::logic_error(
        "fgap_linear_gaussian: requires alpha = 1 and gaussian regressors");
  }
  check_point(model, x, "fgap_linear_gaussian");
  const Eigen::VectorXd d = x - model.xstar;
  return 0.5 * d.cwiseProduct(model.sigma_diag).dot(d);
}

probe_result variance_probe_stats(const glr_model& model, const Eigen::VectorXd& x,
                                  int M, const geometry& geom, rng_stream& rng) {
  if (M < 100) {
    throw std::invalid_argument("variance_probe: need at least 100 samples");
  }
  check_point(model, x, "variance_probe");
  const Eigen::VectorXd gref = reference_grad(model, x, M, rng);
  const int chunk = 8192;
  double sum = 0.0, sum_sq = 0.0;
  int done = 0;
  while (done < M) {
    const int m = static_cast<int>(std::min(chunk, M - done));
    const sample_batch b = draw_batch(model, m, rng);
    for (int i = 0; i < m; ++i) {
      const double r = activation(model.alpha, b.regressors.row(i).dot(x)) -
                       b.responses[i];
      const Eigen::VectorXd delta = b.regressors.row(i).transpose() * r - gref;
      const double v = dual_norm(geom, delta);
      sum += v * v;
      sum_sq += v * v * v * v;
    }
    done += m;
  }
  probe_result out;
  out.value = sum / M;
  const double var = std::max(0.0, sum_sq / M - out.value * out.value);
  out.std_error = std::sqrt(var / M);
  return out;
}

double variance_probe(const glr_model& model, const Eigen::VectorXd& x, int M,
                      const geometry& geom, rng_stream& rng) {
  return variance_probe_stats(model, x, M, geom, rng).value;
}

variance_envelope fit_variance_envelope(const glr_model& model, const geometry& geom,
                                        const Eigen::VectorXd& direction, int M,
                                        rng_stream& rng) {
  check_point(model, direction, "fit_variance_envelope");
  const Eigen::VectorXd xa = model.xstar + 0.5 * direction;
  const Eigen::VectorXd xb = model.xstar + direction;
  const double fa = fgap_estimate(model, xa, M, rng);
  const double fb = fgap_estimate(model, xb, M, rng);
  const double va = variance_probe(model, xa, M, geom, rng);
  const double vb = variance_probe(model, xb, M, geom, rng);
  variance_envelope env;
  if (fb > fa) {
    env.slope = 1.5 * std::max(0.0, (vb - va) / (fb - fa));
  }
  env.intercept = std::max(0.0, va - env.slope / 1.5 * fa);
  return env;
}

problem_constants estimate_constants(const glr_model& model, const geometry& geom,
                                     const Eigen::VectorXd& x0, rng_stream& rng,
                                     const constant_overrides& overrides,
                                     int probe_samples) {
  model.validate();
  check_point(model, x0, "estimate_constants");

  const double tail_scale =
      model.regressors == regressor_kind::student
          ? static_cast<double>(model.regressor_dof) / (model.regressor_dof - 2)
          : 1.0;

  problem_constants c;
  // sup |u_alpha'| = 1 for every alpha in (0, 1].
  c.L = model.sigma_diag.maxCoeff() * tail_scale;

  // Effective lower monotonicity of u_alpha over the 3-sigma range of the
  // signal phi' x*; exact (= 1) for the linear activation.
  double r_eff = 1.0;
  if (model.alpha < 1.0) {
    const double signal_sd = std::sqrt(
        model.xstar.cwiseProduct(model.sigma_diag).dot(model.xstar) * tail_scale);
    const double tau = std::max(1.0, 3.0 * signal_sd);
    r_eff = std::pow(tau, model.alpha - 1.0);
  }
  c.kappa_lower = model.sigma_diag.minCoeff() * tail_scale * r_eff;
  c.mu = geom.kind == geometry_kind::euclidean
             ? c.kappa_lower
             : c.kappa_lower / static_cast<double>(geom.dimension);

  if (!overrides.sigma_star.has_value()) {
    const double v = variance_probe(model, model.xstar, probe_samples, geom, rng);
    c.sigma_star = std::sqrt(std::max(0.0, v));
  }
  if (!overrides.calL.has_value()) {
    Eigen::VectorXd d = x0 - model.xstar;
    if (norm(geom, d) == 0.0) {
      d = Eigen::VectorXd::Zero(model.dimension());
      d[0] = 1.0;
    }
    c.calL = fit_variance_envelope(model, geom, d, probe_samples, rng).slope;
  }
  if (!overrides.Kbar.has_value()) {
    // E[K(xi)^2] <= E[(||phi|| ||phi||_*)^2] since sup |u'| = 1.
    const int mk = 10000;
    const sample_batch b = draw_batch(model, mk, rng);
    double acc = 0.0;
    for (int i = 0; i < mk; ++i) {
      const Eigen::VectorXd phi = b.regressors.row(i).transpose();
      const double k = norm(geom, phi) * dual_norm(geom, phi);
      acc += k * k;
    }
    c.Kbar = std::sqrt(3.0 * acc / mk + 3.0 * c.L * c.L);
  }
  c.D = std::sqrt(geom.omega_bound / 2.0) * norm(geom, x0 - model.xstar);

  if (overrides.L) c.L = *overrides.L;
  if (overrides.calL) c.calL = *overrides.calL;
  if (overrides.sigma_star) c.sigma_star = *overrides.sigma_star;
  if (overrides.mu) c.mu = *overrides.mu;
  if (overrides.kappa_lower) c.kappa_lower = *overrides.kappa_lower;
  if (overrides.D) c.D = *overrides.D;
  if (overrides.Kbar) c.Kbar = *overrides.Kbar;

  for (double v : {c.L, c.calL, c.sigma_star, c.mu, c.kappa_lower, c.D, c.Kbar}) {
    if (!std::isfinite(v)) {
      throw std::runtime_error("estimate_constants: probe produced a non-finite value");
    }
  }
  c.validate();
  return c;
}

}  // namespace sdnopt
