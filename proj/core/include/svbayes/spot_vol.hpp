#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "svbayes/model.hpp"
#include "svbayes/simulate.hpp"

namespace svbayes {

// Test function h applied to rescaled increments. Only cos is built in;
// each entry pairs h with a closed-form rho_h(x) = E[h(Z)], Z ~ N(0, x),
// and its inverse.
enum class TestFunction { Cos };

std::string_view test_function_name(TestFunction h);
TestFunction test_function_from_name(std::string_view name);

struct EstimatorConfig {
  std::int64_t N = 1 << 9;  // Fourier cutoff
  TestFunction h = TestFunction::Cos;
  double T = 1.0;
};

// rho_h for h = cos: E[cos Z] = e^{-x/2} for Z ~ N(0, x).
double rho_h_cos(double x);
// Inverse -2 log y, defined for y in (0, 1]; anything else means the
// clamping step upstream was skipped.
double rho_h_cos_inverse(double y);

// Fourier coefficients of h-transformed rescaled increments,
//   G_k = (1/n) sum_{m=1}^{floor(nT)} e^{-i 2pi k s_{m-1} / T} h(sqrt(n) dX_m),
// returned for k = -N..N (index i holds k = i - N). Conjugate symmetry
// G_{-k} = conj(G_k) holds exactly since h is real-valued. Summation is in
// ascending m within ascending k; this is the reproducibility reference
// order.
std::vector<std::complex<double>> fourier_coefficients(const PathSample& path,
                                                       std::int64_t N,
                                                       TestFunction h,
                                                       double T);

// Triangular-weighted (Fejer) partial sum at time t:
//   Re[ (1/T) sum_{k=-N}^{N} (1 - |k|/N) e^{i 2pi k t / T} G_k ].
// The weight is 1 at k = 0 and 0 at |k| = N. Defined for any real t.
double fejer_reconstruct(std::span<const std::complex<double>> coeffs,
                         std::int64_t N, double T, double t);

// Snapping of the coarse grid t_k = kT/(2N+1), k = 0..2N+1, onto the
// observation grid m/n. `index[k]` is the nearest observation index;
// `exact` when (2N+1) divides floor(nT). Rejects grids whose snapping
// jitter exceeds kMaxRelativeJitter of the coarse step.
struct GridAlignment {
  std::vector<std::int64_t> index;
  double max_rel_jitter = 0.0;
  bool exact = false;
};

inline constexpr double kMaxRelativeJitter = 1e-2;

GridAlignment align_grid(std::int64_t n, double T, std::int64_t N);

// Reconstructed latent path on the coarse grid, plus diagnostics.
struct SpotVolEstimate {
  std::vector<double> t_grid;      // snapped times, 2N+2 entries
  std::vector<double> v_hat;       // estimated latent values, in support
  std::vector<double> rho_h_raw;   // Fejer reconstruction before clamping
  std::vector<std::uint8_t> clamped;
  std::int64_t clamped_count = 0;
  std::vector<std::int64_t> grid_index;  // observation index of each node
  std::int64_t n = 0;
  std::int64_t N = 0;
  TestFunction h = TestFunction::Cos;
  double T = 1.0;
};

// Pathwise spot-variance reconstruction: Fourier coefficients of the
// h-transformed increments, Fejer reconstruction at each coarse node,
// clamping into (0, 1], then inversion v = f^{-1}(sqrt(rho_h^{-1}(r))).
// Pure and deterministic for a given path and configuration.
SpotVolEstimate estimate_spot_vol(const PathSample& path,
                                  const ModelSpec& model,
                                  const EstimatorConfig& cfg);

}  // namespace svbayes
