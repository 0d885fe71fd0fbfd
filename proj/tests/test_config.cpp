#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "normsim/config.hpp"
#include "normsim/errors.hpp"

using namespace normsim;

namespace {

std::filesystem::path write_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("empty config yields the reference defaults") {
  unsetenv("NORMSIM_OUT");
  const auto c = parse_config(std::nullopt, {});
  CHECK(c.params.n_agents == 100);
  CHECK(c.params.b == 0.001);
  CHECK(c.params.c == 1.0);
  CHECK(c.params.r == 2.0);
  CHECK(c.params.s == 0.5);
  CHECK(c.params.delta == 0.05);
  CHECK(c.params.t_max == 100);
  CHECK(c.mu == 0.5);
  CHECK(c.sigma == 0.1);
  CHECK(c.powerlaw.k == 2.0);
  CHECK(c.powerlaw.median == 0.5);
  CHECK(c.ba_m == 2);
  CHECK(c.dynamics.initial_z == 1.0);
  CHECK(c.dynamics.smoothing == PriceSmoothing::Mean);
  CHECK(c.out_dir == "normsim_out");
}

TEST_CASE("flags override file override defaults") {
  const auto path = write_file("normsim_cfg_a.txt",
                               "# comment\niterations = 200\nregime = fixed  # trailing\n"
                               "distributions = powerlaw\n\n");
  const auto from_file = parse_config(path, {});
  CHECK(from_file.params.t_max == 200);
  CHECK(from_file.regime == NormRegime::Fixed);
  CHECK(from_file.distributions == std::vector<Distribution>{Distribution::PowerLaw});
  const auto flagged = parse_config(path, {{"iterations", "50"}});
  CHECK(flagged.params.t_max == 50);
  std::filesystem::remove(path);
}

TEST_CASE("invalid values are rejected with the key named") {
  try {
    parse_config(std::nullopt, {{"s", "1.5"}});
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("s:") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config(std::nullopt, {{"seed", "abc"}}), ConfigError);
  CHECK_THROWS_AS(parse_config(std::nullopt, {{"regime", "flat"}}), ConfigError);
  CHECK_THROWS_AS(parse_config(std::nullopt, {{"sigma", "-1"}}), ConfigError);
  CHECK_THROWS_AS(parse_config(std::nullopt, {{"ba_m", "100"}}), ConfigError);
  CHECK_THROWS_AS(parse_config(std::nullopt, {{"price_smoothing", "max"}}), ConfigError);
  CHECK_THROWS_AS(parse_config(std::nullopt, {{"b", "nan"}}), ConfigError);

  const auto unknown = write_file("normsim_cfg_b.txt", "gamma = 3\n");
  try {
    parse_config(unknown, {});
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("gamma") != std::string::npos);
  }
  const auto malformed = write_file("normsim_cfg_c.txt", "iterations 3\n");
  CHECK_THROWS_AS(parse_config(malformed, {}), ConfigError);
  CHECK_THROWS_AS(parse_config(std::filesystem::path("/nonexistent/cfg"), {}), ConfigError);
  std::filesystem::remove(unknown);
  std::filesystem::remove(malformed);
}

TEST_CASE("environment sets the default output directory") {
  setenv("NORMSIM_OUT", "/tmp/normsim_env_out", 1);
  CHECK(parse_config(std::nullopt, {}).out_dir == "/tmp/normsim_env_out");
  CHECK(parse_config(std::nullopt, {{"out", "elsewhere"}}).out_dir == "elsewhere");
  unsetenv("NORMSIM_OUT");
}

TEST_CASE("every key is accepted") {
  ScenarioConfig c;
  for (const auto& key : config_keys()) {
    std::string v = "1";
    if (key == "distribution" || key == "distributions") v = "normal";
    if (key == "regime") v = "proportional";
    if (key == "graph_file" || key == "out") v = "x";
    if (key == "price_smoothing") v = "sum";
    if (key == "a_max") v = "inf";
    CHECK_NOTHROW(apply_setting(c, key, v));
  }
}

}
