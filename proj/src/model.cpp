#include "normsim/model.hpp"

#include <cmath>
#include <string>

#include "normsim/errors.hpp"

namespace normsim {

void ModelParams::validate() const {
  auto require = [](bool ok, const char* key, const char* rule) {
    if (!ok) throw ParameterError(std::string(key) + ": " + rule);
  };
  require(std::isfinite(b) && b >= 0.0, "b", "must be >= 0");
  require(std::isfinite(c) && c > 0.0, "c", "must be > 0");
  require(std::isfinite(r) && r > 1.0, "r", "must be > 1");
  require(std::isfinite(s) && s > 0.0 && s < 1.0, "s", "must be in (0, 1)");
  require(std::isfinite(delta) && delta > 0.0, "delta", "must be > 0");
  require(n_agents >= 2, "n_agents", "must be >= 2");
  require(t_max >= 0, "iterations", "must be >= 0");
}

std::string_view to_string(NormRegime regime) {
  switch (regime) {
    case NormRegime::Progressive: return "progressive";
    case NormRegime::Proportional: return "proportional";
    case NormRegime::Fixed: return "fixed";
  }
  return "unknown";
}

NormRegime parse_regime(std::string_view name) {
  if (name == "progressive") return NormRegime::Progressive;
  if (name == "proportional") return NormRegime::Proportional;
  if (name == "fixed") return NormRegime::Fixed;
  throw ParameterError("unknown regime '" + std::string(name) + "'");
}

double unit_price(double z_effective, const ModelParams& params) {
  if (!(z_effective >= 0.0)) throw DomainError("unit_price: total resource must be >= 0");
  return params.b * std::pow(z_effective, params.r) + params.c;
}

double utility(double a, double x, double p, const ModelParams& params) {
  return a * std::pow(x, params.s) - p * x;
}

double value(NormRegime regime, double a, double x, double p, double norm,
             const ModelParams& params) {
  const double u = utility(a, x, p, params);
  if (regime == NormRegime::Fixed) return u - norm;
  return u - norm * x;
}

double best_response(double a, double p, double linear_norm, const ModelParams& params) {
  const double effective = p + linear_norm;
  if (!(effective > 0.0)) throw DomainError("best_response: p + norm must be > 0");
  return std::pow(params.s * a / effective, 1.0 / (1.0 - params.s));
}

double equilibrium_value(double a, double p, double linear_norm, double fixed_charge,
                         const ModelParams& params) {
  const double effective = p + linear_norm;
  if (!(effective > 0.0)) throw DomainError("equilibrium_value: p + norm must be > 0");
  const double s = params.s;
  const double k = 1.0 / (1.0 - s);
  return std::pow(s, s * k) * (1.0 - s) * std::pow(a, k) * std::pow(effective, -s * k) -
         fixed_charge;
}

}  // namespace normsim
