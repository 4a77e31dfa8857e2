#pragma once

#include <cstddef>
#include <span>

namespace nilcmetrix {

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Student-t cumulative distribution with `df` degrees of freedom.
double student_t_cdf(double t, double df);

struct WelchResult {
  double t = 0;
  double df = 0;
  double p = 1;  // two-sided
  double mean_a = 0;
  double mean_b = 0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  bool degenerate = false;  // both variances zero with different means
};

/// Welch's unequal-variance t-test. Throws Error when either sample has
/// fewer than two values.
WelchResult welch_t(std::span<const double> a, std::span<const double> b);

}  // namespace nilcmetrix
