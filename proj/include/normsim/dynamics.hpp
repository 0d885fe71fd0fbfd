#pragma once

#include <span>
#include <vector>

#include "normsim/model.hpp"
#include "normsim/network.hpp"
#include "normsim/sampling.hpp"

namespace normsim {

// Regime plus its shared level: n_2 for Proportional, n_3 for Fixed.
// Progressive coefficients live per agent in the state and ignore `level`.
struct NormPolicy {
  NormRegime regime = NormRegime::Progressive;
  double level = 0.0;
};

enum class PriceSmoothing {
  Mean,  // p[t+1] = unit_price((z[t] + z[t+1]) / 2)
  Sum,   // p[t+1] = unit_price(z[t] + z[t+1])
};

struct DynamicsOptions {
  PriceSmoothing smoothing = PriceSmoothing::Mean;
  double initial_z = 1.0;
  // Stop once |z[t+1] - z[t]| < tol. Zero disables; the trace then always
  // has t_max + 1 snapshots.
  double early_stop_tol = 0.0;
};

// Snapshot at step t.
//
// `z` is the total resource that priced this step: the seed value at t = 0,
// afterwards the sum of the previous step's x. `x_sum` is the sum of this
// step's x, the z of the next step.
struct SimulationState {
  int t = 0;
  std::vector<double> x;
  std::vector<double> n;  // per-agent coefficient; shared level replicated
  std::vector<double> v;
  double z = 0.0;
  double x_sum = 0.0;
  double p = 0.0;
};

struct SimulationTrace {
  NormPolicy policy;
  std::vector<SimulationState> steps;  // t = 0..T contiguous

  const SimulationState& final_state() const { return steps.back(); }
};

SimulationState init_state(const ModelParams& params, const AgentPopulation& population,
                           NormPolicy policy, const DynamicsOptions& options = {});

double smoothed_price(double z_prev, double z_curr, const ModelParams& params,
                      PriceSmoothing smoothing = PriceSmoothing::Mean);

// Equity comparison: agent i moves its coefficient up by delta when its
// value/action ratio is at least the mean ratio of its graph neighbors,
// down by delta otherwise, then clamps at zero. Reads only the given
// state. An isolated agent keeps its coefficient.
std::vector<double> norm_update(const SimulationState& state, std::span<const double> actions,
                                const SocialGraph& graph, const ModelParams& params);

SimulationState step(const SimulationState& state, std::span<const double> actions,
                     const SocialGraph& graph, NormPolicy policy, const ModelParams& params,
                     const DynamicsOptions& options = {});

// init_state followed by params.t_max steps. Throws NumericError naming the
// first step with a non-finite quantity.
SimulationTrace run(const ModelParams& params, const AgentPopulation& population,
                    const SocialGraph& graph, NormPolicy policy,
                    const DynamicsOptions& options = {});

// |z - sum_i best_response(a_i, unit_price(z), n)| at the state's z, for
// Proportional and Fixed policies.
double fixed_point_residual(const SimulationState& final_state, std::span<const double> actions,
                            NormPolicy policy, const ModelParams& params);

// Total normative cost w ("total tax revenue").
double total_normative_cost(const SimulationState& state, NormRegime regime);

struct Calibration {
  double level = 0.0;       // calibrated n_2 (or n_3)
  double achieved_w = 0.0;  // w of the run at `level`
  int runs = 0;             // simulations evaluated
};

// Finds n_2 >= 0 whose Proportional run reaches total normative cost
// target_w within rel_tol * target_w, by doubling a bracket from 0 and then
// bisecting. Throws CalibrationError when w stops increasing before the
// target is bracketed or the bracket passes n_2 = 1e3.
Calibration calibrate_proportional(double target_w, const ModelParams& params,
                                   const AgentPopulation& population, const SocialGraph& graph,
                                   const DynamicsOptions& options = {}, double rel_tol = 1e-3);

// n_3 = target_w / N.
double calibrate_fixed(double target_w, const ModelParams& params);

}  // namespace normsim
