#include "normsim/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "normsim/errors.hpp"

namespace normsim {

double gini(std::span<const double> values) {
  if (values.empty()) throw MetricError("gini: empty input");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double total = 0.0;
  double weighted = 0.0;
  // sum_ij |v_i - v_j| = 2 sum_i (2i - n - 1) v_(i) over 1-based ranks; the
  // rank weights sum to zero, so shifting by the minimum changes nothing and
  // makes equal inputs give exactly zero.
  const double base = sorted.front();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    total += sorted[i];
    weighted += (2.0 * static_cast<double>(i + 1) - n - 1.0) * (sorted[i] - base);
  }
  if (total == 0.0) throw MetricError("gini: zero mean");
  return weighted / (n * total);
}

Totals totals(const SimulationState& final_state) {
  Totals out;
  for (double v : final_state.v) out.total_value += v;
  out.total_resources = final_state.z;
  return out;
}

double resource_productivity(double total_value, double total_resources) {
  if (!(total_resources > 0.0)) throw MetricError("resource_productivity: total resources <= 0");
  return total_value / total_resources;
}

double group_objective(std::span<const double> actions, std::span<const double> x,
                       const ModelParams& params) {
  if (actions.size() != x.size()) throw ParameterError("group_objective: size mismatch");
  double production = 0.0;
  double z = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    production += actions[i] * std::pow(x[i], params.s);
    z += x[i];
  }
  return production - z * (params.b * std::pow(z, params.r) + params.c);
}

ShapeFit shape_fit(std::span<const double> actions, std::span<const double> values) {
  if (actions.size() != values.size()) throw ParameterError("shape_fit: size mismatch");
  if (actions.size() < 3) throw MetricError("shape_fit: need at least 3 points");
  const auto [amin, amax] = std::minmax_element(actions.begin(), actions.end());
  if (*amin == *amax) throw MetricError("shape_fit: all actions equal");

  ShapeFit fit;
  const double n = static_cast<double>(actions.size());
  double saa = 0, sav = 0, svv = 0;
  double sq = 0, sv = 0;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const double a = actions[i], v = values[i], q = a * a;
    saa += a * a;
    sav += a * v;
    svv += v * v;
    sq += q;
    sv += v;
  }
  fit.value_norm = std::sqrt(svv);
  fit.alpha = sav / saa;

  // Centered normal equations for v = beta q + gamma.
  const double qbar = sq / n, vbar = sv / n;
  double cqq = 0, cqv = 0;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const double dq = actions[i] * actions[i] - qbar;
    cqq += dq * dq;
    cqv += dq * (values[i] - vbar);
  }
  fit.beta = cqv / cqq;
  fit.gamma = vbar - fit.beta * qbar;

  double lin = 0, quad = 0;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const double a = actions[i], v = values[i];
    const double rl = v - fit.alpha * a;
    const double rq = v - (fit.beta * a * a + fit.gamma);
    lin += rl * rl;
    quad += rq * rq;
  }
  fit.linear_residual = std::sqrt(lin);
  fit.quadratic_residual = std::sqrt(quad);
  return fit;
}

double equity_dispersion(std::span<const double> actions, std::span<const double> values) {
  if (actions.size() != values.size() || actions.empty()) {
    throw ParameterError("equity_dispersion: size mismatch or empty input");
  }
  const double n = static_cast<double>(actions.size());
  double mean = 0.0;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (!(actions[i] > 0.0)) throw ParameterError("equity_dispersion: actions must be > 0");
    mean += values[i] / actions[i];
  }
  mean /= n;
  if (mean == 0.0) throw MetricError("equity_dispersion: zero mean ratio");
  double var = 0.0;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const double d = values[i] / actions[i] - mean;
    var += d * d;
  }
  return std::sqrt(var / n) / std::abs(mean);
}

ScenarioResult summarize(const SimulationTrace& trace, const AgentPopulation& population,
                         std::uint64_t graph_seed) {
  const auto& last = trace.final_state();
  ScenarioResult out;
  out.regime = trace.policy.regime;
  out.distribution = population.distribution;
  out.population_seed = population.seed;
  out.graph_seed = graph_seed;
  out.norm_level = trace.policy.regime == NormRegime::Progressive ? 0.0 : trace.policy.level;
  const Totals t = totals(last);
  out.total_value = t.total_value;
  out.total_resources = t.total_resources;
  out.resource_productivity = resource_productivity(t.total_value, t.total_resources);
  out.gini_values = gini(last.v);
  out.gini_actions = gini(population.actions);
  out.total_normative_cost = total_normative_cost(last, trace.policy.regime);
  out.final_price = last.p;
  out.negative_values = std::any_of(last.v.begin(), last.v.end(), [](double v) { return v < 0; });
  out.steps = last.t;
  return out;
}

const std::vector<std::string>& summary_columns() {
  static const std::vector<std::string> columns{
      "distribution",   "regime",       "population_seed",       "graph_seed",
      "steps",          "norm_level",   "total_value",           "total_resources",
      "resource_productivity", "gini_values", "gini_actions", "total_normative_cost",
      "final_price",    "negative_values"};
  return columns;
}

std::string summary_row(const ScenarioResult& r) {
  return fmt::format("{},{},{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}",
                     to_string(r.distribution), to_string(r.regime), r.population_seed,
                     r.graph_seed, r.steps, r.norm_level, r.total_value, r.total_resources,
                     r.resource_productivity, r.gini_values, r.gini_actions,
                     r.total_normative_cost, r.final_price, r.negative_values ? 1 : 0);
}

}  // namespace normsim
