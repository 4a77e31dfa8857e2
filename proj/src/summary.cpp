#include "nilcmetrix/summary.hpp"

#include <algorithm>
#include <cmath>

namespace nilcmetrix {

std::optional<Summary> summarize(std::span<const double> values) {
  if (values.empty()) return std::nullopt;
  Summary s;
  s.count = values.size();
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double ss = 0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.sd = std::sqrt(ss / static_cast<double>(values.size()));
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

MetricValue ratio(double num, double den) {
  if (den == 0) return std::nullopt;
  return num / den;
}

MetricValue mean_of(std::span<const double> values) {
  auto s = summarize(values);
  return s ? MetricValue(s->mean) : std::nullopt;
}

MetricValue sd_of(std::span<const double> values) {
  auto s = summarize(values);
  return s ? MetricValue(s->sd) : std::nullopt;
}

MetricValue min_of(std::span<const double> values) {
  auto s = summarize(values);
  return s ? MetricValue(s->min) : std::nullopt;
}

MetricValue max_of(std::span<const double> values) {
  auto s = summarize(values);
  return s ? MetricValue(s->max) : std::nullopt;
}

}  // namespace nilcmetrix
