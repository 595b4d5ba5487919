#pragma once

#include <Eigen/Core>

#include "sdnopt/constants.hpp"
#include "sdnopt/geometry.hpp"
#include "sdnopt/rng.hpp"

namespace sdnopt {

enum class regressor_kind { gaussian, student };
enum class noise_kind { gaussian, student };

// Piecewise activation: identity on [-1, 1], a concave power continuation
// outside. Continuous, odd, nondecreasing; alpha = 1 is the identity.
double activation(double alpha, double t);

// Synthetic generalized-linear-regression estimation problem with diagonal
// regressor covariance. Responses are u_alpha(phi' x*) + noise.
struct glr_model {
  Eigen::VectorXd xstar;
  Eigen::VectorXd sigma_diag;  // diagonal of the regressor covariance
  regressor_kind regressors = regressor_kind::gaussian;
  int regressor_dof = 5;  // nu, student regressors only (>= 3)
  noise_kind noise = noise_kind::gaussian;
  int noise_dof = 5;         // nu, student noise only (>= 3)
  double noise_sigma = 0.0;  // sigma
  double alpha = 1.0;

  int dimension() const { return static_cast<int>(xstar.size()); }
  double cond_number() const {
    return sigma_diag.maxCoeff() / sigma_diag.minCoeff();
  }
  bool linear_gaussian() const {
    return alpha == 1.0 && regressors == regressor_kind::gaussian;
  }
  void validate() const;
};

// A drawn mini-batch; immutable and evaluable at any number of query points.
struct sample_batch {
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> regressors;
  Eigen::VectorXd responses;

  int size() const { return static_cast<int>(responses.size()); }
};

// m i.i.d. observations. Deterministic given (stream key, model, m).
sample_batch draw_batch(const glr_model& model, int m, rng_stream& rng);

// Mini-batch gradient estimate (1/m) sum_i phi_i (u_alpha(phi_i' x) - eta_i).
// Accumulation is index-ascending so replays are bitwise identical.
Eigen::VectorXd stoch_grad(const glr_model& model, const sample_batch& batch,
                           const Eigen::VectorXd& x);

// Analytic gradient Sigma (x - x*); linear activation + gaussian regressors only.
Eigen::VectorXd true_grad_linear_gaussian(const glr_model& model,
                                          const Eigen::VectorXd& x);

// Analytic objective gap (1/2) ||x - x*||_Sigma^2; same model restriction.
double fgap_linear_gaussian(const glr_model& model, const Eigen::VectorXd& x);

struct probe_result {
  double value = 0.0;      // Monte Carlo mean of ||G(x, xi) - g(x)||_*^2
  double std_error = 0.0;  // standard error of that mean
};

// Monte Carlo estimate of the dual-norm oracle variance at x over M fresh
// samples. The reference gradient is analytic for linear-gaussian models and
// otherwise estimated from a 10x larger fresh sample.
probe_result variance_probe_stats(const glr_model& model, const Eigen::VectorXd& x,
                                  int M, const geometry& geom, rng_stream& rng);
double variance_probe(const glr_model& model, const Eigen::VectorXd& x, int M,
                      const geometry& geom, rng_stream& rng);

// Two-anchor affine envelope sigma^2(x) <= a * fgap(x) + b fitted along a ray
// from x*; the slope carries a 1.5 safety factor since schedules only need an
// upper bound.
struct variance_envelope {
  double slope = 0.0;
  double intercept = 0.0;
};
variance_envelope fit_variance_envelope(const glr_model& model, const geometry& geom,
                                        const Eigen::VectorXd& direction, int M,
                                        rng_stream& rng);

// Constants for the schedules. Analytic where the model allows (linear
// activation, gaussian regressors), Monte Carlo probes otherwise; overrides
// always win. Throws if a probe produces a non-finite estimate.
problem_constants estimate_constants(const glr_model& model, const geometry& geom,
                                     const Eigen::VectorXd& x0, rng_stream& rng,
                                     const constant_overrides& overrides = {},
                                     int probe_samples = 100000);

}  // namespace sdnopt
