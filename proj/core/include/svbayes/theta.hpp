#pragma once

#include <cmath>
#include <stdexcept>

namespace svbayes {

// Model parameter vector theta = (mu, kappa, m, rho, xi):
//   dX = mu dt + f(V) dW
//   dV = kappa (m - V) dt + xi g(V) dW^V,   W^V = rho W + sqrt(1-rho^2) Wperp
struct Theta {
  double mu;     // return rate, per unit time
  double kappa;  // mean-reversion rate, > 0
  double m;      // long-run mean
  double rho;    // leverage correlation, in [-1, 1]
  double xi;     // vol-of-vol, > 0

  Theta(double mu_, double kappa_, double m_, double rho_, double xi_)
      : mu(mu_), kappa(kappa_), m(m_), rho(rho_), xi(xi_) {
    if (!(std::isfinite(mu) && std::isfinite(kappa) && std::isfinite(m) &&
          std::isfinite(rho) && std::isfinite(xi))) {
      throw std::invalid_argument("Theta: parameters must be finite");
    }
    if (!(kappa > 0.0)) throw std::invalid_argument("Theta: kappa must be > 0");
    if (!(xi > 0.0)) throw std::invalid_argument("Theta: xi must be > 0");
    if (!(rho >= -1.0 && rho <= 1.0)) {
      throw std::invalid_argument("Theta: rho must be in [-1, 1]");
    }
  }

  // Skips the range checks. For degenerate simulation studies only
  // (xi = 0 freezes V into an ODE, kappa = 0 removes mean reversion);
  // the likelihood and sampler layers still enforce the strict ranges.
  static Theta unchecked(double mu, double kappa, double m, double rho,
                         double xi) {
    Theta t(0.0, 1.0, 0.0, 0.0, 1.0);
    t.mu = mu;
    t.kappa = kappa;
    t.m = m;
    t.rho = rho;
    t.xi = xi;
    return t;
  }
};

}  // namespace svbayes
