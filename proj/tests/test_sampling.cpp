#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "normsim/errors.hpp"
#include "normsim/sampling.hpp"
#include "oracles.hpp"

using namespace normsim;

namespace {

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sd(const std::vector<double>& v) {
  const double m = mean(v);
  double acc = 0.0;
  for (double x : v) acc += (x - m) * (x - m);
  return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

}  // namespace

TEST_SUITE("sampling") {

TEST_CASE("normal sampler moments and positivity") {
  const auto pop = sample_normal_actions(10000, 0.5, 0.1, 11);
  CHECK(pop.size() == 10000);
  CHECK(pop.distribution == Distribution::Normal);
  CHECK(mean(pop.actions) == doctest::Approx(0.5).epsilon(0.01));
  CHECK(std::abs(mean(pop.actions) - 0.5) < 0.005);
  CHECK(std::abs(sd(pop.actions) - 0.1) < 0.005);
  CHECK(*std::min_element(pop.actions.begin(), pop.actions.end()) > 0.0);

  // heavy redraw regime still yields strictly positive draws
  const auto wide = sample_normal_actions(5000, 0.1, 0.5, 3);
  CHECK(*std::min_element(wide.actions.begin(), wide.actions.end()) > 0.0);
}

TEST_CASE("normal sampler determinism and errors") {
  CHECK(sample_normal_actions(100, 0.5, 0.1, 5).actions ==
        sample_normal_actions(100, 0.5, 0.1, 5).actions);
  CHECK(sample_normal_actions(100, 0.5, 0.1, 5).actions !=
        sample_normal_actions(100, 0.5, 0.1, 6).actions);
  CHECK_THROWS_AS(sample_normal_actions(0, 0.5, 0.1, 1), ParameterError);
  CHECK_THROWS_AS(sample_normal_actions(10, 0.5, 0.0, 1), ParameterError);
  CHECK_THROWS_AS(sample_normal_actions(10, -0.5, 0.1, 1), ParameterError);
}

TEST_CASE("power-law quantiles") {
  const PowerLaw law;
  CHECK(law.a_min() == 0.25);
  CHECK(law.quantile(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(law.quantile(0.0) == 0.25);
  CHECK(law.quantile(0.75) == doctest::Approx(1.0).epsilon(1e-15));

  // (1/4) a^-2 integrates to 1/2 on [1/4, 1/2] and to 1 on [1/4, inf)
  auto pdf = [](double a) { return 0.25 / (a * a); };
  CHECK(oracle::simpson(pdf, 0.25, 0.5, 2000) == doctest::Approx(0.5).epsilon(1e-10));
  // substitution a = 1/u maps the tail onto u in (0, 4]
  auto tail = [](double) { return 0.25; };
  CHECK(oracle::simpson(tail, 0.0, 4.0, 10) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power-law sampler distribution") {
  const PowerLaw law;
  auto pop = sample_powerlaw_actions(100000, law, 21);
  auto& a = pop.actions;
  CHECK(*std::min_element(a.begin(), a.end()) >= 0.25);
  std::sort(a.begin(), a.end());
  const double median = 0.5 * (a[49999] + a[50000]);
  CHECK(std::abs(median - 0.5) < 0.02);

  // Kolmogorov-Smirnov at the 1% level: D_crit = 1.628 / sqrt(n)
  double d = 0.0;
  const double n = static_cast<double>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double f = 1.0 - 0.25 / a[i];
    d = std::max({d, std::abs(f - static_cast<double>(i) / n),
                  std::abs(static_cast<double>(i + 1) / n - f)});
  }
  CHECK(d < 1.628 / std::sqrt(n));
}

TEST_CASE("power-law truncation and general exponent") {
  PowerLaw law;
  law.a_max = 2.0;
  const auto pop = sample_powerlaw_actions(20000, law, 4);
  CHECK(*std::max_element(pop.actions.begin(), pop.actions.end()) <= 2.0);
  CHECK(law.quantile(0.0) == 0.25);
  CHECK(law.cdf(law.quantile(0.3)) == doctest::Approx(0.3).epsilon(1e-12));

  PowerLaw k3;
  k3.k = 3.0;
  CHECK(k3.quantile(0.5) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(k3.a_min() == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-15));

  PowerLaw bad;
  bad.k = 1.0;
  CHECK_THROWS_AS(sample_powerlaw_actions(10, bad, 1), ParameterError);
  bad = {};
  bad.a_max = 0.2;
  CHECK_THROWS_AS(sample_powerlaw_actions(10, bad, 1), ParameterError);
  CHECK(sample_powerlaw_actions(50, PowerLaw{}, 9).actions ==
        sample_powerlaw_actions(50, PowerLaw{}, 9).actions);
}

TEST_CASE("histogram") {
  const std::vector<double> v{0.5, 0.5, 0.51};
  const auto h = histogram(v, 0.025, 0.0);
  CHECK(h.count(20) == 3);
  CHECK(h.total() == 3);

  const auto empty = histogram(std::vector<double>{}, 0.025, 0.0);
  CHECK(empty.total() == 0);
  CHECK(empty.count(0) == 0);

  const std::vector<double> signed_values{-0.03, -0.01, 0.0, 0.02};
  const auto s = histogram(signed_values, 0.025, 0.0);
  CHECK(s.first_bin == -2);
  CHECK(s.count(-2) == 1);
  CHECK(s.count(-1) == 1);
  CHECK(s.count(0) == 2);
  CHECK(s.lower(-2) == doctest::Approx(-0.05));

  const auto pop = sample_normal_actions(10000, 0.5, 0.1, 8);
  const auto hn = histogram(pop.actions);
  CHECK(hn.total() == 10000);
  const auto mode = std::max_element(hn.counts.begin(), hn.counts.end()) - hn.counts.begin();
  const long modal_bin = hn.first_bin + mode;
  // modal bin is one of the two bins touching 0.5
  CHECK((modal_bin == 19 || modal_bin == 20));

  CHECK_THROWS_AS(histogram(v, 0.0, 0.0), ParameterError);
}

}
