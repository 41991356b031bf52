#include "svbayes/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "svbayes/errors.hpp"
#include "svbayes/rng.hpp"

namespace svbayes {

std::int64_t PathSample::steps_per_unit() const {
  if (times.size() < 2) throw NumericError("PathSample: need at least 2 points");
  const double dt = times[1] - times[0];
  const double n = 1.0 / dt;
  const auto rounded = static_cast<std::int64_t>(std::llround(n));
  if (rounded < 1 || std::fabs(n - static_cast<double>(rounded)) > 1e-6) {
    throw NumericError("PathSample: grid spacing is not 1/n for integer n");
  }
  return rounded;
}

PathSample simulate(const ModelSpec& model, const SimConfig& cfg) {
  if (!(cfg.T > 0.0) || !std::isfinite(cfg.T)) {
    throw ConfigError("simulate: T must be positive and finite");
  }
  if (cfg.n < 2) throw ConfigError("simulate: n must be >= 2");
  const auto steps =
      static_cast<std::int64_t>(std::floor(static_cast<double>(cfg.n) * cfg.T));
  if (steps < 2) throw ConfigError("simulate: floor(n*T) must be >= 2");
  if (!model.in_support(cfg.v0)) {
    throw ConfigError("simulate: v0 outside the support of model '" +
                      model.name + "'");
  }
  if (!std::isfinite(cfg.x0) || !std::isfinite(cfg.v0)) {
    throw ConfigError("simulate: x0 and v0 must be finite");
  }

  const double dt = 1.0 / static_cast<double>(cfg.n);
  const double sqrt_dt = std::sqrt(dt);
  const Theta& th = cfg.theta;
  const double orth = std::sqrt(std::max(0.0, 1.0 - th.rho * th.rho));

  PathSample path;
  path.times.resize(static_cast<std::size_t>(steps) + 1);
  path.x.resize(static_cast<std::size_t>(steps) + 1);
  std::vector<double> v(static_cast<std::size_t>(steps) + 1);

  Rng rng(cfg.seed);
  double x = cfg.x0;
  double v_state = cfg.v0;
  path.times[0] = 0.0;
  path.x[0] = x;
  v[0] = model.clamp_to_support(v_state);

  for (std::int64_t m = 0; m < steps; ++m) {
    const double dw = sqrt_dt * rng.normal();
    const double dw_perp = sqrt_dt * rng.normal();
    const double dw_v = th.rho * dw + orth * dw_perp;

    const double v_eff = model.clamp_to_support(v_state);
    x += th.mu * dt + model.f(v_eff) * dw;
    v_state += th.kappa * (th.m - v_state) * dt + th.xi * model.g(v_eff) * dw_v;

    if (!std::isfinite(x) || !std::isfinite(v_state)) {
      throw NumericError("simulate: non-finite state at step " +
                         std::to_string(m + 1));
    }
    const auto idx = static_cast<std::size_t>(m) + 1;
    path.times[idx] = static_cast<double>(m + 1) * dt;
    path.x[idx] = x;
    v[idx] = model.clamp_to_support(v_state);
  }

  path.v_true = std::move(v);
  return path;
}

PathSample subsample(const PathSample& path, std::int64_t stride) {
  if (stride < 1) throw ConfigError("subsample: stride must be >= 1");
  const auto len = static_cast<std::int64_t>(path.times.size());
  if ((len - 1) % stride != 0) {
    throw ConfigError("subsample: (length-1) not divisible by stride");
  }
  PathSample out;
  const auto count = static_cast<std::size_t>((len - 1) / stride) + 1;
  out.times.reserve(count);
  out.x.reserve(count);
  if (path.v_true) out.v_true.emplace();
  for (std::int64_t i = 0; i < len; i += stride) {
    const auto idx = static_cast<std::size_t>(i);
    out.times.push_back(path.times[idx]);
    out.x.push_back(path.x[idx]);
    if (path.v_true) out.v_true->push_back((*path.v_true)[idx]);
  }
  return out;
}

}  // namespace svbayes
