#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace normsim {

enum class Distribution { Normal, PowerLaw };

std::string_view to_string(Distribution distribution);
Distribution parse_distribution(std::string_view name);

struct AgentPopulation {
  std::vector<double> actions;  // a_i > 0
  Distribution distribution = Distribution::Normal;
  std::uint64_t seed = 0;

  int size() const { return static_cast<int>(actions.size()); }
};

// Normal(mu, sigma) draws; any draw <= 0 is redrawn.
AgentPopulation sample_normal_actions(int n, double mu, double sigma, std::uint64_t seed);

// Pareto population with pdf proportional to a^-k on [a_min, a_max] where
// a_min is fixed by the median of the untruncated law:
// a_min = median / 2^(1/(k-1)). For k = 2, median = 0.5 the pdf is
// (1/4) a^-2 on [0.25, inf). An infinite a_max leaves the tail untruncated.
struct PowerLaw {
  double k = 2.0;
  double median = 0.5;
  double a_max = std::numeric_limits<double>::infinity();

  double a_min() const;
  // Inverse CDF at u in [0, 1).
  double quantile(double u) const;
  double cdf(double a) const;
  void validate() const;
};

AgentPopulation sample_powerlaw_actions(int n, const PowerLaw& law, std::uint64_t seed);

// Fixed-width histogram with signed bin indices: bin k covers
// [origin + k * width, origin + (k + 1) * width).
struct Histogram {
  double bin_width = 0.025;
  double origin = 0.0;
  long first_bin = 0;
  std::vector<std::size_t> counts;

  std::size_t total() const;
  // Count in bin k; zero outside the stored range.
  std::size_t count(long bin) const;
  double lower(long bin) const { return origin + static_cast<double>(bin) * bin_width; }
};

Histogram histogram(std::span<const double> values, double bin_width = 0.025,
                    double origin = 0.0);

// Columns bin_lower, bin_upper, count.
void write_histogram_csv(const Histogram& hist, const std::filesystem::path& path,
                         std::string_view header_comment = {});

}  // namespace normsim
