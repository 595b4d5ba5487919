#pragma once

#include <optional>
#include <stdexcept>

namespace sdnopt {

// Problem constants feeding the stepsize and batch schedules. All norms
// are those of the geometry in use.
struct problem_constants {
  double L = 0.0;            // smoothness of the expected gradient
  double calL = 0.0;         // slope of the state-dependent variance bound
  double sigma_star = 0.0;   // variance floor (sigma_*, not squared)
  double mu = 0.0;           // quadratic growth w.r.t. the geometry norm
  double kappa_lower = 0.0;  // quadratic growth w.r.t. l2
  double D = 0.0;            // Bregman radius, V(x0, x*) <= D^2
  double Kbar = 0.0;         // second-moment Lipschitz constant of the oracle

  void validate() const {
    if (L < 0 || calL < 0 || sigma_star < 0 || mu < 0 || kappa_lower < 0 || D < 0 ||
        Kbar < 0) {
      throw std::invalid_argument("problem_constants: all fields must be nonnegative");
    }
    if (mu > 0 && L > 0 && L < mu) {
      throw std::invalid_argument("problem_constants: L must be >= mu");
    }
  }
};

// Per-constant overrides; any value present wins over the estimate.
struct constant_overrides {
  std::optional<double> L, calL, sigma_star, mu, kappa_lower, D, Kbar, R0;
};

}  // namespace sdnopt
