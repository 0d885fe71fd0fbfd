#include "normsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include <fmt/format.h>

#include "normsim/errors.hpp"
#include "normsim/rng.hpp"

namespace normsim {
namespace {

namespace fs = std::filesystem;

std::ofstream open_csv(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(fmt::format("out: cannot write '{}'", path.string()));
  return out;
}

void make_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw ConfigError(fmt::format("out: cannot create directory '{}'", dir.string()));
  }
}

std::string header_line(const ScenarioConfig& config, const ScenarioResult& r) {
  return fmt::format("# normsim distribution={} regime={} norm_level={:.17g} population_seed={} "
                     "graph_seed={} {}\n",
                     to_string(r.distribution), to_string(r.regime), r.norm_level,
                     r.population_seed, r.graph_seed, describe(config));
}

std::string summary_header() {
  std::string out;
  for (const auto& c : summary_columns()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out + '\n';
}

void write_summary(const fs::path& path, const std::string& comment,
                   const std::vector<ScenarioResult>& rows) {
  auto out = open_csv(path);
  out << comment << summary_header();
  for (const auto& r : rows) out << summary_row(r) << '\n';
}

std::string scenario_dir_name(const ScenarioResult& r) {
  return fmt::format("{}_{}", to_string(r.distribution), to_string(r.regime));
}

double normative_cost(NormRegime regime, double n, double x) {
  return regime == NormRegime::Fixed ? n : n * x;
}

double quantile(std::vector<double> values, double q) {
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

void write_replicate_summary(const fs::path& path, const std::string& comment,
                             const std::vector<ScenarioResult>& rows) {
  using Key = std::pair<Distribution, NormRegime>;
  std::map<Key, std::vector<const ScenarioResult*>> groups;
  for (const auto& r : rows) groups[{r.distribution, r.regime}].push_back(&r);

  struct Metric {
    const char* name;
    double ScenarioResult::*field;
  };
  const Metric metrics[] = {{"total_value", &ScenarioResult::total_value},
                            {"total_resources", &ScenarioResult::total_resources},
                            {"resource_productivity", &ScenarioResult::resource_productivity},
                            {"gini_values", &ScenarioResult::gini_values},
                            {"gini_actions", &ScenarioResult::gini_actions},
                            {"total_normative_cost", &ScenarioResult::total_normative_cost},
                            {"final_price", &ScenarioResult::final_price}};

  auto out = open_csv(path);
  out << comment << "distribution,regime,metric,replicates,q25,median,q75\n";
  for (const auto& [key, members] : groups) {
    for (const auto& m : metrics) {
      std::vector<double> values;
      for (const auto* r : members) values.push_back(r->*m.field);
      out << fmt::format("{},{},{},{},{:.17g},{:.17g},{:.17g}\n", to_string(key.first),
                         to_string(key.second), m.name, values.size(), quantile(values, 0.25),
                         quantile(values, 0.5), quantile(values, 0.75));
    }
  }
}

}  // namespace

std::uint64_t SeedPlan::population(Distribution distribution) const {
  return derive_seed(base, distribution == Distribution::Normal ? 1 : 2);
}

SeedPlan plan_seeds(const ScenarioConfig& config, int replicate) {
  SeedPlan plan;
  plan.base = config.seed + static_cast<std::uint64_t>(replicate);
  plan.graph = config.graph_seed ? *config.graph_seed + static_cast<std::uint64_t>(replicate)
                                 : derive_seed(plan.base, 0);
  return plan;
}

SocialGraph build_graph(const ScenarioConfig& config, const SeedPlan& seeds) {
  if (config.graph_file) {
    SocialGraph graph;
    try {
      graph = load_edge_list(*config.graph_file, config.params.n_agents);
    } catch (const ParameterError& e) {
      throw ConfigError(fmt::format("graph_file: {}", e.what()));
    }
    if (graph.n_nodes() != config.params.n_agents) {
      throw ConfigError(fmt::format("graph_file: {} nodes, expected n_agents = {}",
                                    graph.n_nodes(), config.params.n_agents));
    }
    return graph;
  }
  return generate_ba(config.params.n_agents, config.ba_m, seeds.graph);
}

AgentPopulation build_population(const ScenarioConfig& config, Distribution distribution,
                                 const SeedPlan& seeds) {
  const auto seed = seeds.population(distribution);
  if (distribution == Distribution::Normal) {
    return sample_normal_actions(config.params.n_agents, config.mu, config.sigma, seed);
  }
  return sample_powerlaw_actions(config.params.n_agents, config.powerlaw, seed);
}

void write_scenario_outputs(const fs::path& dir, const ScenarioConfig& config,
                            const SimulationTrace& trace, const AgentPopulation& population,
                            const SocialGraph& graph, const ScenarioResult& result) {
  make_dir(dir);
  const std::string header = header_line(config, result);
  const auto& actions = population.actions;
  const NormRegime regime = trace.policy.regime;

  {
    auto out = open_csv(dir / "agents.csv");
    out << header << "agent_id,a,degree\n";
    for (std::size_t i = 0; i < actions.size(); ++i) {
      out << fmt::format("{},{:.17g},{}\n", i, actions[i], graph.degree(static_cast<int>(i)));
    }
  }
  {
    auto out = open_csv(dir / "edges.csv");
    out << header << "i,j\n";
    for (const auto& [i, j] : graph.edges()) out << i << ',' << j << '\n';
  }
  {
    auto out = open_csv(dir / "trace.csv");
    out << header << "t,agent_id,a,x,n,v\n";
    for (const auto& s : trace.steps) {
      for (std::size_t i = 0; i < actions.size(); ++i) {
        out << fmt::format("{},{},{:.17g},{:.17g},{:.17g},{:.17g}\n", s.t, i, actions[i],
                           s.x[i], s.n[i], s.v[i]);
      }
    }
  }
  {
    auto out = open_csv(dir / "steps.csv");
    out << header << "t,z,p\n";
    for (const auto& s : trace.steps) out << fmt::format("{},{:.17g},{:.17g}\n", s.t, s.z, s.p);
  }
  const auto& last = trace.final_state();
  {
    auto out = open_csv(dir / "final.csv");
    out << header << "agent_id,a,x,n,v,normative_cost\n";
    for (std::size_t i = 0; i < actions.size(); ++i) {
      out << fmt::format("{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", i, actions[i],
                         last.x[i], last.n[i], last.v[i],
                         normative_cost(regime, last.n[i], last.x[i]));
    }
  }
  const std::string comment = header.substr(2, header.size() - 3);
  write_histogram_csv(histogram(actions), dir / "hist_actions.csv", comment);
  write_histogram_csv(histogram(last.v), dir / "hist_values.csv", comment);
  write_summary(dir / "summary.csv", header, {result});
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  config.validate();
  const SeedPlan seeds = plan_seeds(config);
  const SocialGraph graph = build_graph(config, seeds);
  const AgentPopulation population = build_population(config, config.distribution, seeds);
  const NormPolicy policy{config.regime, config.norm_level};
  const SimulationTrace trace = run(config.params, population, graph, policy, config.dynamics);
  const ScenarioResult result = summarize(trace, population, seeds.graph);
  write_scenario_outputs(config.out_dir, config, trace, population, graph, result);
  return result;
}

MatrixReport run_matrix(const ScenarioConfig& config) {
  config.validate();
  make_dir(config.out_dir);
  MatrixReport report;
  const std::string matrix_comment = fmt::format("# normsim matrix seed={} replicates={} {}\n",
                                                 config.seed, config.replicates,
                                                 describe(config));
  for (int rep = 0; rep < config.replicates; ++rep) {
    const SeedPlan seeds = plan_seeds(config, rep);
    const fs::path rep_dir =
        config.replicates > 1 ? config.out_dir / fmt::format("rep_{:03d}", rep) : config.out_dir;
    make_dir(rep_dir);
    const SocialGraph graph = build_graph(config, seeds);
    std::vector<ScenarioResult> rows;

    for (Distribution dist : config.distributions) {
      const AgentPopulation population = build_population(config, dist, seeds);
      auto emit = [&](const SimulationTrace& trace) {
        ScenarioResult r = summarize(trace, population, seeds.graph);
        write_scenario_outputs(rep_dir / scenario_dir_name(r), config, trace, population, graph,
                               r);
        rows.push_back(r);
        return r;
      };
      try {
        const auto progressive = run(config.params, population, graph,
                                     {NormRegime::Progressive, 0.0}, config.dynamics);
        const double w1 = emit(progressive).total_normative_cost;
        const Calibration n2 =
            calibrate_proportional(w1, config.params, population, graph, config.dynamics);
        emit(run(config.params, population, graph, {NormRegime::Proportional, n2.level},
                 config.dynamics));
        emit(run(config.params, population, graph,
                 {NormRegime::Fixed, calibrate_fixed(w1, config.params)}, config.dynamics));
      } catch (const NumericError& e) {
        report.failures.push_back(fmt::format("replicate {} {}: numeric failure: {}", rep,
                                              to_string(dist), e.what()));
      } catch (const CalibrationError& e) {
        report.failures.push_back(fmt::format("replicate {} {}: calibration failed: {}", rep,
                                              to_string(dist), e.what()));
      } catch (const MetricError& e) {
        report.failures.push_back(fmt::format("replicate {} {}: metric undefined: {}", rep,
                                              to_string(dist), e.what()));
      }
    }
    write_summary(rep_dir / "summary.csv",
                  fmt::format("# normsim matrix seed={} graph_seed={} {}\n", seeds.base,
                              seeds.graph, describe(config)),
                  rows);
    report.results.insert(report.results.end(), rows.begin(), rows.end());
  }
  if (config.replicates > 1) {
    write_summary(config.out_dir / "summary.csv", matrix_comment, report.results);
    write_replicate_summary(config.out_dir / "replicate_summary.csv", matrix_comment,
                            report.results);
  }
  return report;
}

MatrixReport write_figures_data(const ScenarioConfig& config) {
  MatrixReport report = run_matrix(config);
  const fs::path bundle = config.out_dir / "figures_data";
  make_dir(bundle);
  const std::string comment = fmt::format("# normsim figures-data seed={} replicates={} {}\n",
                                          config.seed, config.replicates, describe(config));

  // First replicate only; the per-agent plots show one realization.
  const fs::path source = config.replicates > 1 ? config.out_dir / "rep_000" : config.out_dir;
  const SeedPlan seeds = plan_seeds(config);
  const SocialGraph graph = build_graph(config, seeds);
  {
    auto out = open_csv(bundle / "degree_histogram.csv");
    out << comment << "degree,count\n";
    for (const auto& [deg, count] : degree_histogram(graph)) out << deg << ',' << count << '\n';
  }
  auto agents = open_csv(bundle / "agents_final.csv");
  agents << comment << "distribution,regime,agent_id,a,x,n,v,normative_cost\n";
  for (const auto& r : report.results) {
    if (r.population_seed != seeds.population(r.distribution)) continue;
    const fs::path dir = source / scenario_dir_name(r);
    const std::string tag = scenario_dir_name(r);
    fs::copy_file(dir / "hist_values.csv", bundle / fmt::format("hist_values_{}.csv", tag),
                  fs::copy_options::overwrite_existing);
    if (r.regime == NormRegime::Progressive) {
      fs::copy_file(dir / "hist_actions.csv",
                    bundle / fmt::format("hist_actions_{}.csv", to_string(r.distribution)),
                    fs::copy_options::overwrite_existing);
    }
    std::ifstream in(dir / "final.csv");
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (!header_seen) {
        header_seen = true;
        continue;
      }
      agents << to_string(r.distribution) << ',' << to_string(r.regime) << ',' << line << '\n';
    }
  }
  fs::copy_file(config.out_dir / "summary.csv", bundle / "summary.csv",
                fs::copy_options::overwrite_existing);
  if (config.replicates > 1) {
    fs::copy_file(config.out_dir / "replicate_summary.csv", bundle / "replicate_summary.csv",
                  fs::copy_options::overwrite_existing);
  }
  return report;
}

}  // namespace normsim
