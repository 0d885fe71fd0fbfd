#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normsim/dynamics.hpp"
#include "normsim/model.hpp"
#include "normsim/sampling.hpp"

namespace normsim {

struct ScenarioConfig {
  ModelParams params;
  DynamicsOptions dynamics;

  Distribution distribution = Distribution::Normal;
  // Distributions covered by a matrix run, in run order.
  std::vector<Distribution> distributions{Distribution::Normal, Distribution::PowerLaw};
  double mu = 0.5;
  double sigma = 0.1;
  PowerLaw powerlaw;

  NormRegime regime = NormRegime::Progressive;
  double norm_level = 0.0;  // n_2 / n_3 for a single run

  int ba_m = 2;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> graph_seed;
  std::optional<std::filesystem::path> graph_file;

  int replicates = 1;
  std::filesystem::path out_dir = "normsim_out";

  // Throws ConfigError naming the offending key.
  void validate() const;
};

// Every recognized key, as spelled in config files; flags use the same
// names with '_' written as '-'.
const std::vector<std::string>& config_keys();

// Applies one key = value assignment. Throws ConfigError on an unknown key
// or a malformed value.
void apply_setting(ScenarioConfig& config, const std::string& key, const std::string& value);

// Flat "key = value" text, '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::filesystem::path& path);

// Defaults (with NORMSIM_OUT as the default output directory when set),
// then the file, then flag overrides; validated at the end.
ScenarioConfig parse_config(const std::optional<std::filesystem::path>& file,
                            const std::vector<std::pair<std::string, std::string>>& overrides);

// key = value lines reproducing `config`, for output headers.
std::string describe(const ScenarioConfig& config);

}  // namespace normsim
