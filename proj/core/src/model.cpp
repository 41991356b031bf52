#include "svbayes/model.hpp"

#include <cmath>
#include <stdexcept>

#include "svbayes/errors.hpp"

namespace svbayes {

namespace {

// Light construction-time sanity check on a handful of support points:
// f, g positive and f_inverse (when present) actually inverts f.
void check_model(const ModelSpec& model) {
  for (double v : model.support_grid(33)) {
    const double fv = model.f(v);
    const double gv = model.g(v);
    if (!(fv > 0.0) || !(gv > 0.0)) {
      throw std::invalid_argument("ModelSpec '" + model.name +
                                  "': f and g must be positive on the support");
    }
    if (!model.f_inverse) continue;
    const double back = model.f_inverse(fv);
    if (std::fabs(back - v) > 1e-9 * std::max(1.0, std::fabs(v))) {
      throw std::invalid_argument("ModelSpec '" + model.name +
                                  "': f_inverse does not invert f");
    }
  }
}

}  // namespace

std::vector<double> ModelSpec::support_grid(std::size_t count) const {
  std::vector<double> grid;
  grid.reserve(count);
  const double lo = (support == Support::PositiveHalfLine) ? 1e-6 : -10.0;
  const double hi = (support == Support::PositiveHalfLine) ? 10.0 : 10.0;
  for (std::size_t i = 0; i < count; ++i) {
    grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                            static_cast<double>(count - 1));
  }
  return grid;
}

double phi_equivol(double v, const Theta& theta) {
  if (theta.rho == 0.0) return theta.mu;  // both correction terms vanish
  const double c = theta.kappa * theta.rho / theta.xi;
  return theta.mu - c * theta.m + c * v;
}

double phi_expou(double v, const Theta& theta) {
  if (theta.rho == 0.0) return theta.mu;
  const double c = theta.kappa * theta.rho / theta.xi;
  const double ev = std::exp(v);
  return theta.mu - c * theta.m * ev + c * v * ev;
}

ModelSpec make_heston() {
  ModelSpec model;
  model.name = "heston";
  model.support = Support::PositiveHalfLine;
  model.identifiability = Identifiability::EquiVolatility;
  model.f = [](double v) {
    if (!(v > 0.0)) {
      throw std::domain_error("heston: f requires v > 0");
    }
    return std::sqrt(v);
  };
  model.g = model.f;
  model.f_inverse = [](double y) { return y * y; };
  model.fg_ratio = [](double) { return 1.0; };
  model.phi = phi_equivol;
  check_model(model);
  return model;
}

ModelSpec make_expou() {
  ModelSpec model;
  model.name = "expou";
  model.support = Support::RealLine;
  model.identifiability = Identifiability::FullySeparated;
  model.f = [](double v) { return std::exp(v); };
  model.g = [](double) { return 1.0; };
  model.f_inverse = [](double y) { return std::log(y); };
  model.fg_ratio = [](double v) { return std::exp(v); };
  model.phi = phi_expou;
  check_model(model);
  return model;
}

ModelSpec make_equivol(std::string name, std::function<double(double)> f,
                       std::function<double(double)> f_inverse,
                       Support support) {
  ModelSpec model;
  model.name = std::move(name);
  model.support = support;
  model.identifiability = Identifiability::EquiVolatility;
  model.f = f;
  model.g = std::move(f);
  model.f_inverse = std::move(f_inverse);
  model.fg_ratio = [](double) { return 1.0; };
  model.phi = phi_equivol;
  check_model(model);
  return model;
}

ModelSpec make_model(std::string_view name) {
  if (name == "heston") return make_heston();
  if (name == "expou") return make_expou();
  throw ConfigError("unknown model '" + std::string(name) +
                    "' (expected 'heston' or 'expou')");
}

}  // namespace svbayes
