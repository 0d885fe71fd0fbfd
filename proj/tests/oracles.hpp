#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's closed forms.

#include <cmath>
#include <cstdlib>
#include <functional>
#include <span>
#include <vector>

namespace oracle {

// Golden-section search for the maximizer of a unimodal f on [lo, hi].
inline double golden_max(const std::function<double(double)>& f, double lo, double hi,
                         int iterations = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations && (b - a) > 1e-15 * (1.0 + std::abs(a)); ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Value a x^s - p x - n x - charge written out directly.
inline double raw_value(double a, double x, double p, double n, double charge, double s) {
  return a * std::pow(x, s) - p * x - n * x - charge;
}

// Numeric argmax of raw_value over x >= 0. The bracket grows until the
// function turns down.
inline double numeric_best_response(double a, double p, double n, double s) {
  auto f = [&](double x) { return raw_value(a, x, p, n, 0.0, s); };
  double hi = 1.0;
  while (f(2.0 * hi) > f(hi)) hi *= 2.0;
  return golden_max(f, 0.0, 2.0 * hi);
}

// Root of z = sum_i (s a_i / (b z^r + c + n))^(1/(1-s)) by bisection.
inline double bisect_fixed_point(std::span<const double> actions, double n, double b, double c,
                                 double r, double s) {
  auto g = [&](double z) {
    const double p = b * std::pow(z, r) + c + n;
    double total = 0.0;
    for (double a : actions) total += std::pow(s * a / p, 1.0 / (1.0 - s));
    return z - total;
  };
  double lo = 0.0, hi = 1.0;
  while (g(hi) < 0.0) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline double gini_pairwise(std::span<const double> v) {
  double diff = 0.0, sum = 0.0;
  for (double x : v) {
    sum += x;
    for (double y : v) diff += std::abs(x - y);
  }
  const double n = static_cast<double>(v.size());
  // sum_ij |v_i - v_j| / (2 n^2 mean) with n^2 mean = n sum
  return diff / (2.0 * n * sum);
}

// Composite Simpson rule on [lo, hi] with 2m panels.
inline double simpson(const std::function<double(double)>& f, double lo, double hi, int m) {
  const double h = (hi - lo) / (2.0 * m);
  double acc = f(lo) + f(hi);
  for (int i = 1; i < 2 * m; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return acc * h / 3.0;
}

}  // namespace oracle
