#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "svbayes/model.hpp"
#include "svbayes/theta.hpp"

namespace svbayes {

// Configuration for one synthetic path on the fine grid s_m = m/n,
// m = 0..floor(nT).
struct SimConfig {
  double T = 1.0;           // horizon, time units
  std::int64_t n = 1 << 19; // observations per unit time
  double x0 = 0.0;          // initial log-price
  double v0 = 0.09;         // initial latent value, in model support
  Theta theta{0.0, 5.0, 0.02, -0.3, 0.5};
  std::uint64_t seed = 1;
};

// Discretely observed log-price path on a uniform grid; the latent path is
// present only for simulated data.
struct PathSample {
  std::vector<double> times;                  // times[m] = m/n
  std::vector<double> x;                      // log-price
  std::optional<std::vector<double>> v_true;  // latent path, if simulated

  // Observations per unit time, recovered from the grid spacing.
  std::int64_t steps_per_unit() const;
};

// Euler-Maruyama discretization of
//   X_{m+1} = X_m + mu dt + f(V_m) dW_m
//   V_{m+1} = V_m + kappa (m - V_m) dt + xi g(V_m) (rho dW_m + sqrt(1-rho^2) dWperp_m)
// with dW, dWperp independent N(0, dt) draws, exactly one pair per step.
// Positive-support models use full truncation: f and g see the state
// clamped to the support floor while the drift uses the raw state; the
// stored latent path is the clamped value the coefficients saw.
// Deterministic: identical cfg (seed included) gives bit-identical output.
PathSample simulate(const ModelSpec& model, const SimConfig& cfg);

// Every stride-th observation of a path (coarser view of the same
// realization); (length-1) must be divisible by stride.
PathSample subsample(const PathSample& path, std::int64_t stride);

}  // namespace svbayes
