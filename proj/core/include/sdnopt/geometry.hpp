#pragma once

#include <Eigen/Core>

namespace sdnopt {

enum class geometry_kind { euclidean, lp };

// A norm pair with its distance-generating function. The euclidean kind
// uses omega(x) = ||x||_2^2 / 2 (Omega = 1). The lp kind pairs the l1/linf
// norms with omega(x) = c ||x||_p^2, p = 1 + 1/log n, which is 1-strongly
// convex w.r.t. l1 with Omega = e^2 log n.
struct geometry {
  geometry_kind kind = geometry_kind::euclidean;
  int dimension = 0;
  double p = 2.0;            // lp kind only
  double dgf_constant = 0.5; // c in omega(x) = c ||x||_p^2
  double omega_bound = 1.0;  // Omega

  static geometry euclidean(int n);
  static geometry lp(int n);  // requires n >= 3
};

// Primal norm: l2 (euclidean) or l1 (lp kind).
double norm(const geometry& geom, const Eigen::VectorXd& x);

// Dual norm: l2 (euclidean) or linf (lp kind).
double dual_norm(const geometry& geom, const Eigen::VectorXd& y);

double omega(const geometry& geom, const Eigen::VectorXd& x);

Eigen::VectorXd grad_omega(const geometry& geom, const Eigen::VectorXd& x);

// Inverse of grad_omega; the gradient maps of ||.||_p^2/2 and ||.||_q^2/2
// with 1/p + 1/q = 1 invert each other.
Eigen::VectorXd inv_grad_omega(const geometry& geom, const Eigen::VectorXd& y);

// Bregman divergence centered at x0:
//   V_{x0}(x, y) = omega(y-x0) - omega(x-x0) - <grad_omega(x-x0), y-x>.
double bregman(const geometry& geom, const Eigen::VectorXd& x0,
               const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// argmin_z { <a, z> + eta * V_{x0}(z_prev, z) } over the whole space,
// solved from first-order optimality via the inverse gradient map.
Eigen::VectorXd prox_step(const geometry& geom, const Eigen::VectorXd& x0,
                          const Eigen::VectorXd& z_prev, const Eigen::VectorXd& a,
                          double eta);

}  // namespace sdnopt
