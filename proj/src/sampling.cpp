#include "normsim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include <fmt/format.h>

#include "normsim/errors.hpp"
#include "normsim/rng.hpp"

namespace normsim {

std::string_view to_string(Distribution distribution) {
  return distribution == Distribution::Normal ? "normal" : "powerlaw";
}

Distribution parse_distribution(std::string_view name) {
  if (name == "normal") return Distribution::Normal;
  if (name == "powerlaw") return Distribution::PowerLaw;
  throw ParameterError("unknown distribution '" + std::string(name) + "'");
}

AgentPopulation sample_normal_actions(int n, double mu, double sigma, std::uint64_t seed) {
  if (n < 1) throw ParameterError("sample_normal_actions: n must be >= 1");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw ParameterError("mu: must be > 0");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ParameterError("sigma: must be > 0");
  AgentPopulation pop{.actions = {}, .distribution = Distribution::Normal, .seed = seed};
  pop.actions.reserve(static_cast<std::size_t>(n));
  Rng rng(seed);
  while (pop.size() < n) {
    const double a = mu + sigma * rng.normal();
    if (a > 0.0) pop.actions.push_back(a);
  }
  return pop;
}

void PowerLaw::validate() const {
  if (!(k > 1.0) || !std::isfinite(k)) throw ParameterError("k: must be > 1");
  if (!(median > 0.0) || !std::isfinite(median)) throw ParameterError("median: must be > 0");
  if (!(a_max > a_min())) throw ParameterError("a_max: must exceed a_min");
}

double PowerLaw::a_min() const { return median / std::pow(2.0, 1.0 / (k - 1.0)); }

double PowerLaw::cdf(double a) const {
  const double lo = a_min();
  if (a <= lo) return 0.0;
  if (a >= a_max) return 1.0;
  const double tail = std::pow(lo / a, k - 1.0);
  const double mass = std::isinf(a_max) ? 1.0 : 1.0 - std::pow(lo / a_max, k - 1.0);
  return (1.0 - tail) / mass;
}

double PowerLaw::quantile(double u) const {
  const double lo = a_min();
  const double mass = std::isinf(a_max) ? 1.0 : 1.0 - std::pow(lo / a_max, k - 1.0);
  return lo * std::pow(1.0 - u * mass, -1.0 / (k - 1.0));
}

AgentPopulation sample_powerlaw_actions(int n, const PowerLaw& law, std::uint64_t seed) {
  if (n < 1) throw ParameterError("sample_powerlaw_actions: n must be >= 1");
  law.validate();
  AgentPopulation pop{.actions = {}, .distribution = Distribution::PowerLaw, .seed = seed};
  pop.actions.reserve(static_cast<std::size_t>(n));
  Rng rng(seed);
  for (int i = 0; i < n; ++i) pop.actions.push_back(law.quantile(rng.uniform()));
  return pop;
}

std::size_t Histogram::total() const {
  std::size_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::size_t Histogram::count(long bin) const {
  const long offset = bin - first_bin;
  if (offset < 0 || offset >= static_cast<long>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(offset)];
}

Histogram histogram(std::span<const double> values, double bin_width, double origin) {
  if (!(bin_width > 0.0)) throw ParameterError("histogram: bin width must be > 0");
  Histogram hist{.bin_width = bin_width, .origin = origin, .first_bin = 0, .counts = {}};
  if (values.empty()) return hist;
  std::vector<long> bins;
  bins.reserve(values.size());
  for (double v : values) {
    if (!std::isfinite(v)) throw ParameterError("histogram: non-finite value");
    bins.push_back(static_cast<long>(std::floor((v - origin) / bin_width)));
  }
  const auto [lo, hi] = std::minmax_element(bins.begin(), bins.end());
  hist.first_bin = *lo;
  hist.counts.assign(static_cast<std::size_t>(*hi - *lo + 1), 0);
  for (long b : bins) ++hist.counts[static_cast<std::size_t>(b - hist.first_bin)];
  return hist;
}

void write_histogram_csv(const Histogram& hist, const std::filesystem::path& path,
                         std::string_view header_comment) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  if (!header_comment.empty()) out << "# " << header_comment << '\n';
  out << "bin_lower,bin_upper,count\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    const long bin = hist.first_bin + static_cast<long>(i);
    out << fmt::format("{:.17g},{:.17g},{}\n", hist.lower(bin), hist.lower(bin + 1),
                       hist.counts[i]);
  }
}

}  // namespace normsim
