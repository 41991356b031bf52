#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "svbayes/theta.hpp"

namespace svbayes {

// Which parameters the data can pin down. Equi-volatility models (f = g)
// identify only the lump alpha = mu - kappa*rho*m/xi next to (kappa, rho,
// xi); models with separated f and g identify all five entries of Theta.
enum class Identifiability { EquiVolatility, FullySeparated };

enum class Support { PositiveHalfLine, RealLine };

// Numerical floor used when a positive-support latent value must be lifted
// off the boundary (estimator clamping, simulator truncation).
inline constexpr double kSupportFloor = 1e-10;

// A concrete stochastic-volatility model: the transforms f and g, the
// closed-form inverse of f, the ratio f/g, and the conditional drift map
//   phi(v; theta) = mu - (kappa rho m / xi) (f/g)(v) + (kappa rho / xi) (f/g)(v) v.
// Instances are immutable values; copy and share freely across threads.
struct ModelSpec {
  std::string name;
  Support support = Support::PositiveHalfLine;
  Identifiability identifiability = Identifiability::EquiVolatility;
  std::function<double(double)> f;
  std::function<double(double)> g;
  std::function<double(double)> f_inverse;
  std::function<double(double)> fg_ratio;
  std::function<double(double, const Theta&)> phi;

  bool in_support(double v) const {
    return support == Support::RealLine || v > 0.0;
  }

  // Nearest in-support value; identity on the real line.
  double clamp_to_support(double v) const {
    if (support == Support::RealLine) return v;
    return v > kSupportFloor ? v : kSupportFloor;
  }

  // Evenly spaced probe points inside the declared support, used for
  // construction-time sanity checks and round-trip tests.
  std::vector<double> support_grid(std::size_t count) const;
};

// Conditional drift for f = g (Heston and other equi-volatility models):
//   mu - kappa*rho*m/xi + (kappa*rho/xi) v.
double phi_equivol(double v, const Theta& theta);

// Conditional drift for f(v) = e^v, g == 1:
//   mu - (rho*kappa*m/xi) e^v + (rho*kappa/xi) v e^v.
// Overflows to +-inf for extreme v; callers in the likelihood layer reject
// non-finite values rather than crash.
double phi_expou(double v, const Theta& theta);

ModelSpec make_heston();
ModelSpec make_expou();

// Generic equi-volatility model with g = f. The caller supplies the
// closed-form inverse of f; no numerical root finding happens here.
// f_inverse may be empty for simulation-only models (constant f has no
// inverse); the spot-variance estimator rejects such models.
ModelSpec make_equivol(std::string name, std::function<double(double)> f,
                       std::function<double(double)> f_inverse,
                       Support support);

// Lookup by CLI identifier ("heston" | "expou"); throws ConfigError.
ModelSpec make_model(std::string_view name);

}  // namespace svbayes
