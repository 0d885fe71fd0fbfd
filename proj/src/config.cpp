#include "normsim/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "normsim/errors.hpp"

namespace normsim {
namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

double to_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ConfigError(fmt::format("{}: '{}' is not a number", key, text));
  }
  return out;
}

template <typename Int>
Int to_int(const std::string& key, const std::string& text) {
  Int out{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(fmt::format("{}: '{}' is not an integer", key, text));
  }
  return out;
}

template <typename Fn>
auto wrap(const std::string& key, Fn&& fn) {
  try {
    return fn();
  } catch (const ParameterError& e) {
    throw ConfigError(fmt::format("{}: {}", key, e.what()));
  }
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "n_agents", "b",        "c",          "r",          "s",         "delta",
      "iterations", "distribution", "distributions", "mu", "sigma",  "k",
      "median",   "a_max",    "regime",     "norm_level", "ba_m",      "seed",
      "graph_seed", "graph_file", "replicates", "out",    "price_smoothing",
      "initial_z", "early_stop_tol"};
  return keys;
}

void apply_setting(ScenarioConfig& config, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  auto& p = config.params;
  if (key == "n_agents") p.n_agents = to_int<int>(key, value);
  else if (key == "b") p.b = to_double(key, value);
  else if (key == "c") p.c = to_double(key, value);
  else if (key == "r") p.r = to_double(key, value);
  else if (key == "s") p.s = to_double(key, value);
  else if (key == "delta") p.delta = to_double(key, value);
  else if (key == "iterations") p.t_max = to_int<int>(key, value);
  else if (key == "distribution") {
    config.distribution = wrap(key, [&] { return parse_distribution(value); });
  } else if (key == "distributions") {
    config.distributions.clear();
    std::stringstream list(value);
    std::string item;
    while (std::getline(list, item, ',')) {
      config.distributions.push_back(wrap(key, [&] { return parse_distribution(trim(item)); }));
    }
  } else if (key == "mu") config.mu = to_double(key, value);
  else if (key == "sigma") config.sigma = to_double(key, value);
  else if (key == "k") config.powerlaw.k = to_double(key, value);
  else if (key == "median") config.powerlaw.median = to_double(key, value);
  else if (key == "a_max") {
    config.powerlaw.a_max = value == "inf" ? INFINITY : to_double(key, value);
  } else if (key == "regime") {
    config.regime = wrap(key, [&] { return parse_regime(value); });
  } else if (key == "norm_level") config.norm_level = to_double(key, value);
  else if (key == "ba_m") config.ba_m = to_int<int>(key, value);
  else if (key == "seed") config.seed = to_int<std::uint64_t>(key, value);
  else if (key == "graph_seed") config.graph_seed = to_int<std::uint64_t>(key, value);
  else if (key == "graph_file") {
    if (value.empty()) config.graph_file.reset();
    else config.graph_file = value;
  } else if (key == "replicates") config.replicates = to_int<int>(key, value);
  else if (key == "out") config.out_dir = value;
  else if (key == "price_smoothing") {
    if (value == "mean") config.dynamics.smoothing = PriceSmoothing::Mean;
    else if (value == "sum") config.dynamics.smoothing = PriceSmoothing::Sum;
    else throw ConfigError(fmt::format("{}: expected 'mean' or 'sum', got '{}'", key, value));
  } else if (key == "initial_z") config.dynamics.initial_z = to_double(key, value);
  else if (key == "early_stop_tol") config.dynamics.early_stop_tol = to_double(key, value);
  else throw ConfigError(fmt::format("unknown key '{}'", key));
}

void ScenarioConfig::validate() const {
  try {
    params.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  auto require = [](bool ok, const char* key, const char* rule) {
    if (!ok) throw ConfigError(fmt::format("{}: {}", key, rule));
  };
  require(mu > 0.0 && std::isfinite(mu), "mu", "must be > 0");
  require(sigma > 0.0 && std::isfinite(sigma), "sigma", "must be > 0");
  require(powerlaw.k > 1.0 && std::isfinite(powerlaw.k), "k", "must be > 1");
  require(powerlaw.median > 0.0 && std::isfinite(powerlaw.median), "median", "must be > 0");
  require(powerlaw.a_max > powerlaw.a_min(), "a_max", "must exceed the power-law minimum");
  require(norm_level >= 0.0 && std::isfinite(norm_level), "norm_level", "must be >= 0");
  require(ba_m >= 1, "ba_m", "must be >= 1");
  require(graph_file.has_value() || params.n_agents > ba_m, "ba_m",
          "must be smaller than n_agents");
  require(replicates >= 1, "replicates", "must be >= 1");
  require(!distributions.empty(), "distributions", "must list at least one distribution");
  require(dynamics.initial_z >= 0.0 && std::isfinite(dynamics.initial_z), "initial_z",
          "must be >= 0");
  require(dynamics.early_stop_tol >= 0.0, "early_stop_tol", "must be >= 0");
  require(!out_dir.empty(), "out", "must not be empty");
}

std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("config: cannot read '{}'", path.string()));
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(
          fmt::format("{}:{}: expected 'key = value'", path.string(), line_no));
    }
    std::string key = trim(body.substr(0, eq));
    if (key.empty()) {
      throw ConfigError(fmt::format("{}:{}: missing key", path.string(), line_no));
    }
    out.emplace_back(std::move(key), trim(body.substr(eq + 1)));
  }
  return out;
}

ScenarioConfig parse_config(const std::optional<std::filesystem::path>& file,
                            const std::vector<std::pair<std::string, std::string>>& overrides) {
  ScenarioConfig config;
  if (const char* env = std::getenv("NORMSIM_OUT"); env != nullptr && *env != '\0') {
    config.out_dir = env;
  }
  if (file) {
    for (const auto& [key, value] : read_config_file(*file)) apply_setting(config, key, value);
  }
  for (const auto& [key, value] : overrides) apply_setting(config, key, value);
  config.validate();
  return config;
}

std::string describe(const ScenarioConfig& c) {
  std::string dists;
  for (auto d : c.distributions) {
    if (!dists.empty()) dists += ',';
    dists += to_string(d);
  }
  return fmt::format(
      "n_agents={} b={:.17g} c={:.17g} r={:.17g} s={:.17g} delta={:.17g} iterations={} "
      "distributions={} mu={:.17g} sigma={:.17g} k={:.17g} median={:.17g} a_max={} ba_m={} "
      "price_smoothing={} initial_z={:.17g}",
      c.params.n_agents, c.params.b, c.params.c, c.params.r, c.params.s, c.params.delta,
      c.params.t_max, dists, c.mu, c.sigma, c.powerlaw.k, c.powerlaw.median,
      std::isinf(c.powerlaw.a_max) ? std::string("inf") : fmt::format("{:.17g}", c.powerlaw.a_max),
      c.ba_m, c.dynamics.smoothing == PriceSmoothing::Mean ? "mean" : "sum",
      c.dynamics.initial_z);
}

}  // namespace normsim
