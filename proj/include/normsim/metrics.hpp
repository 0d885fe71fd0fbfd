#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "normsim/dynamics.hpp"
#include "normsim/model.hpp"
#include "normsim/sampling.hpp"

namespace normsim {

// Mean-absolute-difference Gini, sum_ij |v_i - v_j| / (2 n^2 mean), via the
// sorted O(n log n) form. Negative entries are admitted; the result may then
// leave [0, 1). Throws MetricError on empty input or zero mean.
double gini(std::span<const double> values);

struct Totals {
  double total_value = 0.0;
  double total_resources = 0.0;
};

// Sum of final values and the final step's z.
Totals totals(const SimulationState& final_state);

double resource_productivity(double total_value, double total_resources);

// sum_i a_i x_i^s - z (b z^r + c) with z = sum_i x_i.
double group_objective(std::span<const double> actions, std::span<const double> x,
                       const ModelParams& params);

struct ShapeFit {
  // v ~ alpha * a
  double alpha = 0.0;
  double linear_residual = 0.0;  // ||v - alpha a||_2
  // v ~ beta * a^2 + gamma
  double beta = 0.0;
  double gamma = 0.0;
  double quadratic_residual = 0.0;
  double value_norm = 0.0;  // ||v||_2, denominator of the relative residuals

  double linear_relative() const { return value_norm > 0 ? linear_residual / value_norm : 0; }
  double quadratic_relative() const {
    return value_norm > 0 ? quadratic_residual / value_norm : 0;
  }
};

// Least-squares fits of v on a (through the origin) and on a^2 (with
// intercept). Needs at least three points with distinct a.
ShapeFit shape_fit(std::span<const double> actions, std::span<const double> values);

// Coefficient of variation (population sd / mean) of v_i / a_i.
double equity_dispersion(std::span<const double> actions, std::span<const double> values);

struct ScenarioResult {
  NormRegime regime = NormRegime::Progressive;
  Distribution distribution = Distribution::Normal;
  std::uint64_t population_seed = 0;
  std::uint64_t graph_seed = 0;
  double norm_level = 0.0;  // n_2 or n_3; 0 for progressive
  double total_value = 0.0;
  double total_resources = 0.0;
  double resource_productivity = 0.0;
  double gini_values = 0.0;
  double gini_actions = 0.0;
  double total_normative_cost = 0.0;
  double final_price = 0.0;
  bool negative_values = false;  // some v_i < 0; gini_values outside [0, 1) possible
  int steps = 0;
};

ScenarioResult summarize(const SimulationTrace& trace, const AgentPopulation& population,
                         std::uint64_t graph_seed);

// Summary CSV columns, in order.
const std::vector<std::string>& summary_columns();
std::string summary_row(const ScenarioResult& result);

}  // namespace normsim
