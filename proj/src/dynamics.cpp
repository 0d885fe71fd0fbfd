#include "normsim/dynamics.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "normsim/errors.hpp"

namespace normsim {
namespace {

double sum(std::span<const double> values) {
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

void respond(SimulationState& state, std::span<const double> actions, NormPolicy policy,
             const ModelParams& params) {
  const std::size_t n = actions.size();
  state.x.resize(n);
  state.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double norm = state.n[i];
    state.x[i] = best_response(actions[i], state.p, linear_norm(policy.regime, norm), params);
    state.v[i] = value(policy.regime, actions[i], state.x[i], state.p, norm, params);
  }
  state.x_sum = sum(state.x);
}

bool all_finite(const SimulationState& state) {
  if (!std::isfinite(state.z) || !std::isfinite(state.p) || !std::isfinite(state.x_sum)) {
    return false;
  }
  for (std::size_t i = 0; i < state.x.size(); ++i) {
    if (!std::isfinite(state.x[i]) || !std::isfinite(state.v[i]) || !std::isfinite(state.n[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace

SimulationState init_state(const ModelParams& params, const AgentPopulation& population,
                           NormPolicy policy, const DynamicsOptions& options) {
  if (population.size() != params.n_agents) {
    throw ParameterError(fmt::format("population size {} != n_agents {}", population.size(),
                                     params.n_agents));
  }
  if (policy.regime != NormRegime::Progressive && !(policy.level >= 0.0)) {
    throw ParameterError("norm level must be >= 0");
  }
  SimulationState state;
  state.t = 0;
  state.z = options.initial_z;
  state.p = unit_price(options.initial_z, params);
  const double n0 = policy.regime == NormRegime::Progressive ? 0.0 : policy.level;
  state.n.assign(population.actions.size(), n0);
  respond(state, population.actions, policy, params);
  return state;
}

double smoothed_price(double z_prev, double z_curr, const ModelParams& params,
                      PriceSmoothing smoothing) {
  if (!(z_prev >= 0.0) || !(z_curr >= 0.0)) {
    throw DomainError("smoothed_price: total resources must be >= 0");
  }
  const double z = smoothing == PriceSmoothing::Mean ? 0.5 * (z_prev + z_curr) : z_prev + z_curr;
  return unit_price(z, params);
}

std::vector<double> norm_update(const SimulationState& state, std::span<const double> actions,
                                const SocialGraph& graph, const ModelParams& params) {
  const std::size_t n = actions.size();
  if (static_cast<std::size_t>(graph.n_nodes()) != n || state.v.size() != n ||
      state.n.size() != n) {
    throw ParameterError("norm_update: graph, state and population sizes differ");
  }
  std::vector<double> ratio(n);
  for (std::size_t i = 0; i < n; ++i) ratio[i] = state.v[i] / actions[i];

  std::vector<double> next(state.n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto nbrs = graph.neighbors(static_cast<int>(i));
    if (nbrs.empty()) continue;
    double acc = 0.0;
    for (int j : nbrs) acc += ratio[static_cast<std::size_t>(j)];
    const double mean = acc / static_cast<double>(nbrs.size());
    const double moved = ratio[i] >= mean ? state.n[i] + params.delta : state.n[i] - params.delta;
    next[i] = moved > 0.0 ? moved : 0.0;
  }
  return next;
}

SimulationState step(const SimulationState& state, std::span<const double> actions,
                     const SocialGraph& graph, NormPolicy policy, const ModelParams& params,
                     const DynamicsOptions& options) {
  SimulationState next;
  next.t = state.t + 1;
  next.z = sum(state.x);
  next.p = smoothed_price(state.z, next.z, params, options.smoothing);
  next.n = policy.regime == NormRegime::Progressive
               ? norm_update(state, actions, graph, params)
               : state.n;
  respond(next, actions, policy, params);
  return next;
}

SimulationTrace run(const ModelParams& params, const AgentPopulation& population,
                    const SocialGraph& graph, NormPolicy policy, const DynamicsOptions& options) {
  if (policy.regime == NormRegime::Progressive && graph.n_nodes() != population.size()) {
    throw ParameterError(fmt::format("graph has {} nodes but population has {} agents",
                                     graph.n_nodes(), population.size()));
  }
  SimulationTrace trace{.policy = policy, .steps = {}};
  trace.steps.reserve(static_cast<std::size_t>(params.t_max) + 1);
  trace.steps.push_back(init_state(params, population, policy, options));
  if (!all_finite(trace.steps.back())) throw NumericError("non-finite state", 0);
  for (int t = 0; t < params.t_max; ++t) {
    SimulationState next = step(trace.steps.back(), population.actions, graph, policy, params,
                                options);
    if (!all_finite(next)) throw NumericError("non-finite state", next.t);
    const double dz = std::abs(next.z - trace.steps.back().z);
    trace.steps.push_back(std::move(next));
    if (options.early_stop_tol > 0.0 && dz < options.early_stop_tol) break;
  }
  return trace;
}

double fixed_point_residual(const SimulationState& final_state, std::span<const double> actions,
                            NormPolicy policy, const ModelParams& params) {
  if (policy.regime == NormRegime::Progressive) {
    throw ParameterError("fixed_point_residual: requires a constant-norm regime");
  }
  const double z = final_state.z;
  const double p = unit_price(z, params);
  const double charge = linear_norm(policy.regime, policy.level);
  double total = 0.0;
  for (double a : actions) total += best_response(a, p, charge, params);
  return std::abs(z - total);
}

double total_normative_cost(const SimulationState& state, NormRegime regime) {
  if (state.n.empty()) return 0.0;
  switch (regime) {
    case NormRegime::Progressive: {
      double w = 0.0;
      for (std::size_t i = 0; i < state.x.size(); ++i) w += state.n[i] * state.x[i];
      return w;
    }
    case NormRegime::Proportional:
      return state.n.front() * sum(state.x);
    case NormRegime::Fixed:
      return state.n.front() * static_cast<double>(state.n.size());
  }
  return 0.0;
}

Calibration calibrate_proportional(double target_w, const ModelParams& params,
                                   const AgentPopulation& population, const SocialGraph& graph,
                                   const DynamicsOptions& options, double rel_tol) {
  if (!(target_w >= 0.0) || !std::isfinite(target_w)) {
    throw CalibrationError("calibrate_proportional: target w must be finite and >= 0");
  }
  Calibration out;
  if (target_w == 0.0) return out;

  auto w_at = [&](double level) {
    ++out.runs;
    const auto trace = run(params, population, graph, {NormRegime::Proportional, level}, options);
    return total_normative_cost(trace.final_state(), NormRegime::Proportional);
  };
  const double tol = rel_tol * target_w;
  constexpr double kMaxLevel = 1e3;

  double lo = 0.0;
  double w_lo = 0.0;
  double hi = 0.05;
  double w_hi = w_at(hi);
  while (w_hi < target_w - tol) {
    if (w_hi <= w_lo) {
      throw CalibrationError(fmt::format(
          "calibrate_proportional: w stopped increasing before reaching target {:.6g} "
          "(w({:.6g}) = {:.6g}, w({:.6g}) = {:.6g})",
          target_w, lo, w_lo, hi, w_hi));
    }
    lo = hi;
    w_lo = w_hi;
    hi *= 2.0;
    if (hi > kMaxLevel) {
      throw CalibrationError(fmt::format(
          "calibrate_proportional: no bracket for target {:.6g} up to n_2 = {:g}", target_w,
          kMaxLevel));
    }
    w_hi = w_at(hi);
  }
  if (std::abs(w_hi - target_w) <= tol) {
    out.level = hi;
    out.achieved_w = w_hi;
    return out;
  }

  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double w_mid = w_at(mid);
    if (std::abs(w_mid - target_w) <= tol) {
      out.level = mid;
      out.achieved_w = w_mid;
      return out;
    }
    if (w_mid < target_w) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw CalibrationError(fmt::format(
      "calibrate_proportional: bisection did not reach target {:.6g} within tolerance "
      "(bracket [{:.17g}, {:.17g}])",
      target_w, lo, hi));
}

double calibrate_fixed(double target_w, const ModelParams& params) {
  if (!(target_w >= 0.0)) throw CalibrationError("calibrate_fixed: target w must be >= 0");
  return target_w / static_cast<double>(params.n_agents);
}

}  // namespace normsim
