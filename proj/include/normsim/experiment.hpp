#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "normsim/config.hpp"
#include "normsim/dynamics.hpp"
#include "normsim/metrics.hpp"
#include "normsim/network.hpp"
#include "normsim/sampling.hpp"

namespace normsim {

// Seeds actually used for one replicate of an experiment.
struct SeedPlan {
  std::uint64_t base = 0;
  std::uint64_t graph = 0;
  std::uint64_t population(Distribution distribution) const;
};

// Replicate r shifts the base seed (and an explicit graph seed) by r; the
// graph seed otherwise derives from the base seed.
SeedPlan plan_seeds(const ScenarioConfig& config, int replicate = 0);

SocialGraph build_graph(const ScenarioConfig& config, const SeedPlan& seeds);
AgentPopulation build_population(const ScenarioConfig& config, Distribution distribution,
                                 const SeedPlan& seeds);

// Writes agents.csv, edges.csv, trace.csv, steps.csv, final.csv,
// hist_actions.csv, hist_values.csv and summary.csv into `dir`.
void write_scenario_outputs(const std::filesystem::path& dir, const ScenarioConfig& config,
                            const SimulationTrace& trace, const AgentPopulation& population,
                            const SocialGraph& graph, const ScenarioResult& result);

// One scenario (config.regime, config.distribution, config.norm_level) into
// config.out_dir.
ScenarioResult run_scenario(const ScenarioConfig& config);

struct MatrixReport {
  std::vector<ScenarioResult> results;  // per replicate: distribution-major, P, Q, F
  std::vector<std::string> failures;    // one diagnostic line per aborted distribution
  bool ok() const { return failures.empty(); }
};

// For each replicate and distribution: progressive run first, then n_3 =
// w_1 / N and n_2 by bisection, then the proportional and fixed runs on the
// same population and graph. Outputs go to out/<distribution>_<regime>/
// (under rep_NNN/ when replicates > 1) plus summary.csv; multi-replicate runs
// also write replicate_summary.csv. A calibration or numeric failure aborts
// only that distribution of that replicate.
MatrixReport run_matrix(const ScenarioConfig& config);

// Runs the matrix and adds a figures_data/ bundle of plot-ready CSVs.
MatrixReport write_figures_data(const ScenarioConfig& config);

}  // namespace normsim
