#pragma once

#include <cstddef>
#include <optional>
#include <span>

namespace nilcmetrix {

/// A metric value; std::nullopt is MISSING (serialized as NA).
using MetricValue = std::optional<double>;

/// Descriptive statistics with population standard deviation.
struct Summary {
  std::size_t count = 0;
  double mean = 0;
  double sd = 0;
  double min = 0;
  double max = 0;
};

std::optional<Summary> summarize(std::span<const double> values);

/// num / den, MISSING when den == 0.
MetricValue ratio(double num, double den);
MetricValue mean_of(std::span<const double> values);
MetricValue sd_of(std::span<const double> values);
MetricValue min_of(std::span<const double> values);
MetricValue max_of(std::span<const double> values);

}  // namespace nilcmetrix
