// normsim: run one scenario, the 2 x 3 regime/distribution matrix, or the
// plot-ready CSV bundle.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "normsim/config.hpp"
#include "normsim/errors.hpp"
#include "normsim/experiment.hpp"

namespace {

struct Flags {
  std::string config_path;
  std::map<std::string, std::string> values;  // config key -> raw flag value
};

std::string flag_name(const std::string& key) {
  std::string out = key;
  for (auto& ch : out) {
    if (ch == '_') ch = '-';
  }
  return "--" + out;
}

void add_common(CLI::App& cmd, Flags& flags) {
  cmd.add_option("--config", flags.config_path, "flat key = value config file");
  for (const auto& key : normsim::config_keys()) {
    cmd.add_option_function<std::string>(
        flag_name(key), [&flags, key](const std::string& v) { flags.values[key] = v; },
        "overrides config key '" + key + "'");
  }
}

normsim::ScenarioConfig resolve(const Flags& flags) {
  std::optional<std::filesystem::path> file;
  if (!flags.config_path.empty()) file = flags.config_path;
  std::vector<std::pair<std::string, std::string>> overrides(flags.values.begin(),
                                                             flags.values.end());
  return normsim::parse_config(file, overrides);
}

void print_result(const normsim::ScenarioResult& r) {
  std::cout << fmt::format(
      "{:<9} {:<12} level={:<10.6g} V={:<10.6g} Z={:<10.6g} V/Z={:<8.5g} gini(v)={:<8.5g} "
      "gini(a)={:<8.5g} w={:.6g}{}\n",
      normsim::to_string(r.distribution), normsim::to_string(r.regime), r.norm_level,
      r.total_value, r.total_resources, r.resource_productivity, r.gini_values, r.gini_actions,
      r.total_normative_cost, r.negative_values ? "  [negative values]" : "");
}

int report_matrix(const normsim::MatrixReport& report) {
  for (const auto& r : report.results) print_result(r);
  for (const auto& f : report.failures) std::cerr << "error: " << f << '\n';
  return report.ok() ? EXIT_SUCCESS : EXIT_FAILURE;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource-sharing game with utility-plus-norm value functions"};
  app.require_subcommand(1);

  Flags run_flags, matrix_flags, figures_flags;
  auto* run_cmd = app.add_subcommand("run", "simulate one regime on one population");
  add_common(*run_cmd, run_flags);
  auto* matrix_cmd = app.add_subcommand("matrix", "all regimes x distributions with calibration");
  add_common(*matrix_cmd, matrix_flags);
  auto* figures_cmd = app.add_subcommand("figures-data", "matrix plus plot-ready CSV bundle");
  add_common(*figures_cmd, figures_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      const auto config = resolve(run_flags);
      print_result(normsim::run_scenario(config));
      return EXIT_SUCCESS;
    }
    if (matrix_cmd->parsed()) return report_matrix(normsim::run_matrix(resolve(matrix_flags)));
    if (figures_cmd->parsed()) {
      return report_matrix(normsim::write_figures_data(resolve(figures_flags)));
    }
  } catch (const normsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const normsim::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return EXIT_FAILURE;
}
