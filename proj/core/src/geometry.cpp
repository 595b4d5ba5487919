#include "sdnopt/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace sdnopt {

namespace {

constexpr double kUnderflowGuard = 1e-300;

void check_dim(const geometry& geom, const Eigen::VectorXd& v, const char* what) {
  if (v.size() != geom.dimension) {
    throw std::invalid_argument(std::string(what) + ": vector length " +
                                std::to_string(v.size()) + " != geometry dimension " +
                                std::to_string(geom.dimension));
  }
}

// ||x||_p computed in scaled form so the component powers stay in [0, 1].
double lp_norm(const Eigen::VectorXd& x, double p) {
  const double m = x.cwiseAbs().maxCoeff();
  if (m < kUnderflowGuard) return 0.0;
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double r = std::abs(x[i]) / m;
    if (r > 0.0) s += std::pow(r, p);
  }
  return m * std::pow(s, 1.0 / p);
}

// grad of ||x||_p^2 / 2, i.e. ||x||_p^{2-p} |x_i|^{p-1} sign(x_i), in the
// same scaled form (factors of max|x_i| recombine to a single power).
Eigen::VectorXd grad_half_lp_sq(const Eigen::VectorXd& x, double p) {
  const Eigen::Index n = x.size();
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  const double m = x.cwiseAbs().maxCoeff();
  if (m < kUnderflowGuard) return g;
  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = std::abs(x[i]) / m;
    if (r > 0.0) s += std::pow(r, p);
  }
  const double scale = m * std::pow(s, (2.0 - p) / p);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = std::abs(x[i]) / m;
    if (r > 0.0) g[i] = scale * std::pow(r, p - 1.0) * (x[i] > 0.0 ? 1.0 : -1.0);
  }
  return g;
}

}  // namespace

geometry geometry::euclidean(int n) {
  if (n < 1) throw std::invalid_argument("geometry::euclidean: dimension must be >= 1");
  geometry g;
  g.kind = geometry_kind::euclidean;
  g.dimension = n;
  g.p = 2.0;
  g.dgf_constant = 0.5;
  g.omega_bound = 1.0;
  return g;
}

geometry geometry::lp(int n) {
  if (n < 3) throw std::invalid_argument("geometry::lp: dimension must be >= 3");
  geometry g;
  g.kind = geometry_kind::lp;
  g.dimension = n;
  const double logn = std::log(static_cast<double>(n));
  g.p = 1.0 + 1.0 / logn;
  g.dgf_constant = 0.5 * std::exp(1.0) * logn *
                   std::pow(static_cast<double>(n), (g.p - 1.0) * (2.0 - g.p) / g.p);
  g.omega_bound = std::exp(2.0) * logn;
  return g;
}

double norm(const geometry& geom, const Eigen::VectorXd& x) {
  check_dim(geom, x, "norm");
  return geom.kind == geometry_kind::euclidean ? x.norm() : x.lpNorm<1>();
}

double dual_norm(const geometry& geom, const Eigen::VectorXd& y) {
  check_dim(geom, y, "dual_norm");
  return geom.kind == geometry_kind::euclidean ? y.norm() : y.lpNorm<Eigen::Infinity>();
}

double omega(const geometry& geom, const Eigen::VectorXd& x) {
  check_dim(geom, x, "omega");
  if (geom.kind == geometry_kind::euclidean) return 0.5 * x.squaredNorm();
  const double np = lp_norm(x, geom.p);
  return geom.dgf_constant * np * np;
}

Eigen::VectorXd grad_omega(const geometry& geom, const Eigen::VectorXd& x) {
  check_dim(geom, x, "grad_omega");
  if (geom.kind == geometry_kind::euclidean) return x;
  return 2.0 * geom.dgf_constant * grad_half_lp_sq(x, geom.p);
}

Eigen::VectorXd inv_grad_omega(const geometry& geom, const Eigen::VectorXd& y) {
  check_dim(geom, y, "inv_grad_omega");
  if (geom.kind == geometry_kind::euclidean) return y;
  const double q = geom.p / (geom.p - 1.0);
  return grad_half_lp_sq(y / (2.0 * geom.dgf_constant), q);
}

double bregman(const geometry& geom, const Eigen::VectorXd& x0,
               const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  check_dim(geom, x0, "bregman");
  check_dim(geom, x, "bregman");
  check_dim(geom, y, "bregman");
  const Eigen::VectorXd dx = x - x0;
  return omega(geom, y - x0) - omega(geom, dx) - grad_omega(geom, dx).dot(y - x);
}

Eigen::VectorXd prox_step(const geometry& geom, const Eigen::VectorXd& x0,
                          const Eigen::VectorXd& z_prev, const Eigen::VectorXd& a,
                          double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("prox_step: eta must be > 0");
  check_dim(geom, x0, "prox_step");
  check_dim(geom, z_prev, "prox_step");
  check_dim(geom, a, "prox_step");
  if (geom.kind == geometry_kind::euclidean) return z_prev - a / eta;
  const Eigen::VectorXd dual = grad_omega(geom, z_prev - x0) - a / eta;
  return x0 + inv_grad_omega(geom, dual);
}

}  // namespace sdnopt
