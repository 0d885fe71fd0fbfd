#pragma once

#include <string_view>

namespace normsim {

// Global constants of the resource-sharing game.
//
// Price of one resource unit is b * z^r + c for group total z; an agent with
// action a that uses x units earns a * x^s - p * x before normative costs.
struct ModelParams {
  double b = 0.001;   // price coefficient
  double c = 1.0;     // price constant
  double r = 2.0;     // congestion exponent, > 1
  double s = 0.5;     // returns exponent, in (0, 1)
  double delta = 0.05;  // norm step per update
  int n_agents = 100;
  int t_max = 100;

  // Throws ParameterError naming the first violated constraint.
  void validate() const;
};

// How the normative cost enters an agent's value.
//   Progressive: per-agent coefficient on used resource, fostered by comparison.
//   Proportional: one shared coefficient on used resource.
//   Fixed: one shared lump charge, independent of used resource.
enum class NormRegime { Progressive, Proportional, Fixed };

std::string_view to_string(NormRegime regime);
NormRegime parse_regime(std::string_view name);

// Per-unit part of the norm charge seen by the best response. The Fixed
// regime's lump charge does not move the argmax, so it contributes zero.
constexpr double linear_norm(NormRegime regime, double norm) {
  return regime == NormRegime::Fixed ? 0.0 : norm;
}

double unit_price(double z_effective, const ModelParams& params);

double utility(double a, double x, double p, const ModelParams& params);

// Utility minus the regime's normative cost. `norm` is the coefficient
// (Progressive, Proportional) or the lump charge (Fixed).
double value(NormRegime regime, double a, double x, double p, double norm,
             const ModelParams& params);

// Used resource maximizing a * x^s - (p + linear_norm) * x over x >= 0:
//   x = (s * a / (p + linear_norm))^(1 / (1 - s))
double best_response(double a, double p, double linear_norm, const ModelParams& params);

// Value attained at the best response, in closed form:
//   s^(s/(1-s)) * (1 - s) * a^(1/(1-s)) * (p + n)^(-s/(1-s)) - fixed_charge
// For s = 0.5 this is s(1-s) a^2 / (p + n) - fixed_charge.
double equilibrium_value(double a, double p, double linear_norm, double fixed_charge,
                         const ModelParams& params);

}  // namespace normsim
