#include "sdnopt/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sdnopt {

namespace sc = schedule_constants;

sagd_schedule sagd_schedule::make(int k, int m, double eta, double L) {
  if (k < 1) throw std::invalid_argument("sagd_schedule: horizon must be >= 1");
  if (m < 1) throw std::invalid_argument("sagd_schedule: batch size must be >= 1");
  if (!(eta > 0.0)) throw std::invalid_argument("sagd_schedule: eta must be > 0");
  if (eta < sc::sagd_eta_floor * L) {
    throw std::invalid_argument("sagd_schedule: eta must be >= 4 L");
  }
  sagd_schedule s;
  s.k = k;
  s.m = m;
  s.eta = eta;
  s.theta.resize(k);
  s.beta.resize(k);
  s.eta_t.resize(k);
  for (int t = 1; t <= k; ++t) {
    s.theta[t - 1] = static_cast<double>(t + 1) * (t + 2);
    s.beta[t - 1] = 3.0 / (t + 2);
    s.eta_t[t - 1] = eta / (t + 1);
  }
  const double level = s.theta[0] * s.beta[0] * s.eta_t[0];
  for (int t = 1; t <= k; ++t) {
    const double prod = s.theta_at(t) * s.beta_at(t) * s.eta_at(t);
    if (std::abs(prod - level) > 1e-9 * level) {
      throw std::logic_error("sagd_schedule: theta*beta*eta must be constant");
    }
    if (!(s.eta_at(t) > L * s.beta_at(t))) {
      throw std::logic_error("sagd_schedule: eta_t > L beta_t violated");
    }
  }
  return s;
}

sge_schedule sge_schedule::make(int k, int m, double eta, double L) {
  if (k < 1) throw std::invalid_argument("sge_schedule: horizon must be >= 1");
  if (m < 1) throw std::invalid_argument("sge_schedule: batch size must be >= 1");
  if (!(eta > 0.0)) throw std::invalid_argument("sge_schedule: eta must be > 0");
  if (eta < sc::sge_eta_floor * L) {
    throw std::invalid_argument("sge_schedule: eta must be >= 24 L");
  }
  sge_schedule s;
  s.k = k;
  s.m = m;
  s.eta = eta;
  s.theta.resize(k);
  s.alpha.resize(k);
  s.beta.resize(k);
  s.eta_t.resize(k);
  for (int t = 1; t <= k; ++t) {
    s.theta[t - 1] = static_cast<double>(t);
    s.alpha[t - 1] = static_cast<double>(t - 1) / t;
    s.beta[t - 1] = 3.0 / (t + 2);
    s.eta_t[t - 1] = eta / t;
  }
  for (int t = 2; t <= k; ++t) {
    if (std::abs(s.theta_at(t - 1) - s.alpha_at(t) * s.theta_at(t)) > 1e-12 * t) {
      throw std::logic_error("sge_schedule: theta_{t-1} = alpha_t theta_t violated");
    }
    if (s.eta_at(t) > s.alpha_at(t) * s.eta_at(t - 1) + 1e-12 * eta) {
      throw std::logic_error("sge_schedule: eta_t <= alpha_t eta_{t-1} violated");
    }
  }
  return s;
}

double sagd_eta(const problem_constants& c, int k, int m, sagd_variant variant) {
  if (k < 2) throw std::invalid_argument("sagd_eta: horizon must be >= 2");
  if (m < 1) throw std::invalid_argument("sagd_eta: batch size must be >= 1");
  if (!(c.D > 0.0)) throw std::invalid_argument("sagd_eta: D must be > 0");
  const double md = static_cast<double>(m);
  if (variant == sagd_variant::sn) {
    const double t1 = sc::sagd_eta_floor * c.L;
    const double t2 = sc::sagd_state_term * (k - 1) * c.calL / md;
    const double t3 =
        std::sqrt(sc::sagd_cross_term * (k + 1.0) * (k + 1.0) * c.L * c.calL / md);
    const double t4 =
        c.sigma_star / c.D * std::sqrt(2.0 * std::pow(k + 2.0, 3) / (3.0 * md));
    return std::max({t1, t2, t3, t4});
  }
  if (!(c.Kbar > 0.0) && (c.calL > 0.0 || c.sigma_star > 0.0)) {
    throw std::invalid_argument("sagd_eta: lp variant requires Kbar");
  }
  const double t1 = sc::sagd_eta_floor * c.L;
  const double t2 = sc::sagd_lp_state_term * (k + 1) * c.calL / md;
  const double t3 = sc::sagd_lp_cross_term * std::sqrt(k * c.Kbar * c.Kbar / md);
  const double t4 = c.sigma_star / c.D * std::sqrt(2.0 * std::pow(k + 2.0, 3) / md);
  return std::max({t1, t2, t3, t4});
}

double sge_eta(const problem_constants& c, int k, int m) {
  if (k < 1) throw std::invalid_argument("sge_eta: horizon must be >= 1");
  if (m < 1) throw std::invalid_argument("sge_eta: batch size must be >= 1");
  if (!(c.D > 0.0)) throw std::invalid_argument("sge_eta: D must be > 0");
  const double md = static_cast<double>(m);
  const double t1 = sc::sge_eta_floor * c.L;
  const double t2 = sc::sge_state_term * (k + 2) * c.calL / md;
  const double t3 = c.sigma_star / c.D * std::sqrt(2.0 * std::pow(k + 1.0, 3) / md);
  return std::max({t1, t2, t3});
}

namespace {

int ceil_to_batch(double v) {
  if (!(v > 1.0)) return 1;
  if (v > 1e9) throw std::invalid_argument("auto batch size exceeds 1e9");
  return static_cast<int>(std::ceil(v));
}

}  // namespace

int sagd_auto_batch(const problem_constants& c, int k, sagd_variant variant) {
  if (!(c.L > 0.0)) throw std::invalid_argument("sagd_auto_batch: L must be > 0");
  if (!(c.D > 0.0)) throw std::invalid_argument("sagd_auto_batch: D must be > 0");
  const double kd = static_cast<double>(k);
  const double noise = kd * kd * kd * c.sigma_star * c.sigma_star / (c.D * c.D * c.L * c.L);
  if (variant == sagd_variant::sn) {
    return ceil_to_batch(std::max(kd * kd * c.calL / c.L, noise));
  }
  return ceil_to_batch(std::max({kd * c.calL / c.L,
                                 kd * c.Kbar * c.Kbar / (c.L * c.L), noise}));
}

int sge_auto_batch(const problem_constants& c, int k) {
  if (!(c.L > 0.0)) throw std::invalid_argument("sge_auto_batch: L must be > 0");
  if (!(c.D > 0.0)) throw std::invalid_argument("sge_auto_batch: D must be > 0");
  const double kd = static_cast<double>(k);
  const double noise = kd * kd * kd * c.sigma_star * c.sigma_star / (c.D * c.D * c.L * c.L);
  return ceil_to_batch(std::max(c.calL * kd / c.L, noise));
}

}  // namespace sdnopt
