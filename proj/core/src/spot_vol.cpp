#include "svbayes/spot_vol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "svbayes/errors.hpp"

namespace svbayes {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Fejer values at or below zero are lifted here before inversion.
constexpr double kClampFloor = 1e-8;

// Incremental phase rotations are re-anchored with a fresh std::polar every
// this many terms to stop rounding drift over ~10^6-step sums.
constexpr std::int64_t kPhaseAnchorInterval = 4096;

double apply_h(TestFunction h, double x) {
  switch (h) {
    case TestFunction::Cos:
      return std::cos(x);
  }
  throw std::logic_error("unreachable test function");
}

double rho_h_inverse(TestFunction h, double y) {
  switch (h) {
    case TestFunction::Cos:
      return rho_h_cos_inverse(y);
  }
  throw std::logic_error("unreachable test function");
}

// Odd divisors d >= 3 of M, reported as N = (d-1)/2 candidates for an
// exactly aligned grid.
std::vector<std::int64_t> exact_n_candidates(std::int64_t M) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 3; d * d <= M; d += 2) {
    if (M % d == 0) {
      out.push_back((d - 1) / 2);
      const std::int64_t q = M / d;
      if (q % 2 == 1 && q != d) out.push_back((q - 1) / 2);
    }
  }
  if (M % 2 == 1 && M >= 3) out.push_back((M - 1) / 2);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string_view test_function_name(TestFunction h) {
  switch (h) {
    case TestFunction::Cos:
      return "cos";
  }
  throw std::logic_error("unreachable test function");
}

TestFunction test_function_from_name(std::string_view name) {
  if (name == "cos") return TestFunction::Cos;
  throw ConfigError("unknown test function '" + std::string(name) +
                    "' (expected 'cos')");
}

double rho_h_cos(double x) {
  if (!(x >= 0.0)) throw std::domain_error("rho_h_cos: x must be >= 0");
  return std::exp(-0.5 * x);
}

double rho_h_cos_inverse(double y) {
  if (!(y > 0.0 && y <= 1.0)) {
    throw std::domain_error(
        "rho_h_cos_inverse: y must be in (0,1]; clamp upstream");
  }
  return -2.0 * std::log(y);
}

std::vector<std::complex<double>> fourier_coefficients(const PathSample& path,
                                                       std::int64_t N,
                                                       TestFunction h,
                                                       double T) {
  if (N < 1) throw ConfigError("fourier_coefficients: N must be >= 1");
  if (!(T > 0.0)) throw ConfigError("fourier_coefficients: T must be > 0");
  const std::int64_t n = path.steps_per_unit();
  const auto M =
      static_cast<std::int64_t>(std::floor(static_cast<double>(n) * T));
  if (M < 1 || static_cast<std::size_t>(M) + 1 > path.x.size() + 0 ||
      path.x.size() < static_cast<std::size_t>(M) + 1) {
    throw ConfigError("fourier_coefficients: path too short for horizon T");
  }

  const double sqrt_n = std::sqrt(static_cast<double>(n));
  std::vector<double> h_vals(static_cast<std::size_t>(M));
  for (std::int64_t m = 0; m < M; ++m) {
    const double dx = path.x[static_cast<std::size_t>(m) + 1] -
                      path.x[static_cast<std::size_t>(m)];
    if (!std::isfinite(dx)) {
      throw NumericError("fourier_coefficients: non-finite increment at index " +
                         std::to_string(m + 1));
    }
    h_vals[static_cast<std::size_t>(m)] = apply_h(h, sqrt_n * dx);
  }

  std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(2 * N + 1));
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::int64_t k = 0; k <= N; ++k) {
    // e^{-i 2pi k s_{m-1} / T} with s_{m-1} of the m-th increment = m'/n
    // for m' = 0..M-1; one incremental rotation per term.
    const double phase_step = -kTwoPi * static_cast<double>(k) /
                              (T * static_cast<double>(n));
    const std::complex<double> rot = std::polar(1.0, phase_step);
    std::complex<double> phase(1.0, 0.0);
    std::complex<double> acc(0.0, 0.0);
    for (std::int64_t m = 0; m < M; ++m) {
      acc += phase * h_vals[static_cast<std::size_t>(m)];
      if ((m + 1) % kPhaseAnchorInterval == 0) {
        phase = std::polar(1.0, phase_step * static_cast<double>(m + 1));
      } else {
        phase *= rot;
      }
    }
    const std::complex<double> g = acc * inv_n;
    coeffs[static_cast<std::size_t>(N + k)] = g;
    coeffs[static_cast<std::size_t>(N - k)] = std::conj(g);
  }
  return coeffs;
}

double fejer_reconstruct(std::span<const std::complex<double>> coeffs,
                         std::int64_t N, double T, double t) {
  if (N < 1) throw ConfigError("fejer_reconstruct: N must be >= 1");
  if (coeffs.size() != static_cast<std::size_t>(2 * N + 1)) {
    throw ConfigError("fejer_reconstruct: expected 2N+1 coefficients");
  }
  std::complex<double> sum(0.0, 0.0);
  for (std::int64_t k = -N; k <= N; ++k) {
    const double weight =
        1.0 - static_cast<double>(std::llabs(k)) / static_cast<double>(N);
    if (weight == 0.0) continue;
    const std::complex<double> phase =
        std::polar(1.0, kTwoPi * static_cast<double>(k) * t / T);
    sum += weight * phase * coeffs[static_cast<std::size_t>(k + N)];
  }
  return sum.real() / T;
}

GridAlignment align_grid(std::int64_t n, double T, std::int64_t N) {
  if (N < 1) throw ConfigError("align_grid: N must be >= 1");
  const auto M =
      static_cast<std::int64_t>(std::floor(static_cast<double>(n) * T));
  const std::int64_t K = 2 * N + 1;
  if (M < K) {
    throw AlignmentError("grid alignment: floor(nT) = " + std::to_string(M) +
                         " is smaller than 2N+1 = " + std::to_string(K));
  }

  GridAlignment out;
  out.exact = (M % K == 0);
  out.index.resize(static_cast<std::size_t>(K) + 1);
  double max_jitter = 0.0;
  for (std::int64_t k = 0; k <= K; ++k) {
    const double ideal = static_cast<double>(k) * static_cast<double>(M) /
                         static_cast<double>(K);
    const auto snapped = static_cast<std::int64_t>(std::llround(ideal));
    out.index[static_cast<std::size_t>(k)] = snapped;
    // offset in units of the coarse step Delta t = T/(2N+1)
    const double jitter = std::fabs(static_cast<double>(snapped) - ideal) *
                          static_cast<double>(K) / static_cast<double>(M);
    max_jitter = std::max(max_jitter, jitter);
  }
  out.max_rel_jitter = max_jitter;

  if (!out.exact && max_jitter > kMaxRelativeJitter) {
    const auto candidates = exact_n_candidates(M);
    std::string hint;
    // nearest exact choices around the requested N
    std::vector<std::int64_t> near = candidates;
    std::sort(near.begin(), near.end(), [N](std::int64_t a, std::int64_t b) {
      return std::llabs(a - N) < std::llabs(b - N);
    });
    for (std::size_t i = 0; i < near.size() && i < 3; ++i) {
      hint += (i ? ", " : "") + std::to_string(near[i]);
    }
    const auto snap_max = static_cast<std::int64_t>(
        std::floor((2.0 * kMaxRelativeJitter * static_cast<double>(M) - 1.0) /
                   2.0));
    std::string msg = "grid alignment: 2N+1 = " + std::to_string(K) +
                      " does not divide floor(nT) = " + std::to_string(M) +
                      " and snapping jitter " + std::to_string(max_jitter) +
                      " exceeds " + std::to_string(kMaxRelativeJitter);
    if (!hint.empty()) msg += "; exactly aligned N: " + hint;
    if (snap_max >= 1) {
      msg += "; snapped alignment works for N <= " + std::to_string(snap_max);
    }
    throw AlignmentError(msg);
  }

  for (std::int64_t k = 1; k <= K; ++k) {
    if (out.index[static_cast<std::size_t>(k)] <=
        out.index[static_cast<std::size_t>(k - 1)]) {
      throw AlignmentError("grid alignment: coarse nodes collide on the "
                           "observation grid; decrease N");
    }
  }
  return out;
}

SpotVolEstimate estimate_spot_vol(const PathSample& path,
                                  const ModelSpec& model,
                                  const EstimatorConfig& cfg) {
  if (!model.f_inverse) {
    throw ConfigError("estimate_spot_vol: model '" + model.name +
                      "' has no f_inverse");
  }
  const std::int64_t n = path.steps_per_unit();
  const GridAlignment grid = align_grid(n, cfg.T, cfg.N);

  const auto coeffs = fourier_coefficients(path, cfg.N, cfg.h, cfg.T);

  SpotVolEstimate est;
  est.n = n;
  est.N = cfg.N;
  est.h = cfg.h;
  est.T = cfg.T;
  est.grid_index = grid.index;
  const std::size_t nodes = grid.index.size();
  est.t_grid.resize(nodes);
  est.v_hat.resize(nodes);
  est.rho_h_raw.resize(nodes);
  est.clamped.assign(nodes, 0);

  for (std::size_t k = 0; k < nodes; ++k) {
    const double t = path.times[static_cast<std::size_t>(grid.index[k])];
    est.t_grid[k] = t;
    const double raw = fejer_reconstruct(coeffs, cfg.N, cfg.T, t);
    est.rho_h_raw[k] = raw;

    double r = raw;
    if (!(r > kClampFloor)) {
      r = kClampFloor;
      est.clamped[k] = 1;
    } else if (r > 1.0) {
      r = 1.0;
      est.clamped[k] = 1;
    }
    est.clamped_count += est.clamped[k];

    const double y = std::sqrt(rho_h_inverse(cfg.h, r));
    double v;
    if (model.support == Support::PositiveHalfLine) {
      v = (y > 0.0) ? std::max(model.f_inverse(y), kSupportFloor)
                    : kSupportFloor;
    } else {
      v = model.f_inverse(std::max(y, kSupportFloor));
    }
    est.v_hat[k] = v;
  }
  return est;
}

}  // namespace svbayes
