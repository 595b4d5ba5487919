#pragma once

#include <vector>

#include "sdnopt/constants.hpp"

namespace sdnopt {

// Stepsize-policy constants, kept in one place. These are the final printed
// values; a revision only needs to touch this block.
namespace schedule_constants {
inline constexpr double sagd_eta_floor = 4.0;    // eta >= 4 L
inline constexpr double sge_eta_floor = 24.0;    // eta >= 24 L
inline constexpr double sagd_state_term = 6.0;   // 6 (k-1) calL / m
inline constexpr double sagd_cross_term = 9.0;   // sqrt(9 (k+1)^2 L calL / m)
inline constexpr double sagd_lp_state_term = 18.0;   // 18 (k+1) calL / m
inline constexpr double sagd_lp_cross_term = 12.0;   // 12 sqrt(k Kbar^2 / m)
inline constexpr double sge_state_term = 18.0;   // 18 (k+2) calL / m
inline constexpr double sagd_rate = 12.0;        // 12 L D^2 / ((k+1)(k+2))
inline constexpr double sge_rate = 73.0;         // 73 L D^2 / (k (k+2))
inline constexpr double sge_state_rate = 54.0;   // 54 calL D^2 / (m k)
inline constexpr double sge_noise_rate = 6.0;    // 6 sqrt(2) sigma* D / sqrt(m k)
}  // namespace schedule_constants

enum class sagd_variant { sn, lp };

// SAGD stepsize policy: theta_t = (t+1)(t+2), beta_t = 3/(t+2),
// eta_t = eta/(t+1). Sequences are 1-indexed by iteration.
struct sagd_schedule {
  int k = 0;
  int m = 1;
  double eta = 0.0;
  std::vector<double> theta, beta, eta_t;

  double theta_at(int t) const { return theta[t - 1]; }
  double beta_at(int t) const { return beta[t - 1]; }
  double eta_at(int t) const { return eta_t[t - 1]; }

  // Builds and verifies theta*beta*eta constancy and eta_t > L beta_t.
  static sagd_schedule make(int k, int m, double eta, double L);
};

// SGE stepsize policy: theta_t = t, alpha_t = (t-1)/t, beta_t = 3/(t+2),
// eta_t = eta/t.
struct sge_schedule {
  int k = 0;
  int m = 1;
  double eta = 0.0;
  std::vector<double> theta, alpha, beta, eta_t;

  double theta_at(int t) const { return theta[t - 1]; }
  double alpha_at(int t) const { return alpha[t - 1]; }
  double beta_at(int t) const { return beta[t - 1]; }
  double eta_at(int t) const { return eta_t[t - 1]; }

  // Builds and verifies theta_{t-1} = alpha_t theta_t and
  // eta_t <= alpha_t eta_{t-1}.
  static sge_schedule make(int k, int m, double eta, double L);
};

// Corollary stepsize bases.
double sagd_eta(const problem_constants& c, int k, int m, sagd_variant variant);
double sge_eta(const problem_constants& c, int k, int m);

// Batch sizes attaining the optimal iteration complexity for a horizon k.
int sagd_auto_batch(const problem_constants& c, int k, sagd_variant variant);
int sge_auto_batch(const problem_constants& c, int k);

}  // namespace sdnopt
