#include "nilcmetrix/stats.hpp"

#include <cmath>
#include <limits>

#include "nilcmetrix/errors.hpp"

namespace nilcmetrix {

namespace {

// Continued fraction for the incomplete beta (modified Lentz).
double beta_fraction(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-15;
  constexpr int kMaxIter = 10000;
  double c = 1.0;
  double d = 1.0 - (a + b) * x / (a + 1.0);
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return h;
}

struct Moments {
  double mean = 0;
  double var = 0;  // unbiased
};

Moments moments(std::span<const double> v) {
  Moments m;
  for (double x : v) m.mean += x;
  m.mean /= static_cast<double>(v.size());
  for (double x : v) m.var += (x - m.mean) * (x - m.mean);
  m.var /= static_cast<double>(v.size() - 1);
  return m;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_fraction(a, b, x) / a;
  return 1.0 - front * beta_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double x = df / (df + t * t);
  const double tail = 0.5 * incomplete_beta(df / 2.0, 0.5, x);
  return t > 0 ? 1.0 - tail : tail;
}

WelchResult welch_t(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw Error("welch_t needs at least two values per sample");
  const Moments ma = moments(a);
  const Moments mb = moments(b);
  WelchResult r;
  r.mean_a = ma.mean;
  r.mean_b = mb.mean;
  r.n_a = a.size();
  r.n_b = b.size();
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = ma.var / na;
  const double vb = mb.var / nb;
  if (va + vb == 0) {
    r.df = na + nb - 2.0;
    if (ma.mean == mb.mean) {
      r.t = 0;
      r.p = 1;
    } else {
      r.t = ma.mean > mb.mean ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();
      r.p = 0;
      r.degenerate = true;
    }
    return r;
  }
  r.t = (ma.mean - mb.mean) / std::sqrt(va + vb);
  r.df = (va + vb) * (va + vb) /
         (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  r.p = std::fmin(1.0, 2.0 * student_t_cdf(-std::fabs(r.t), r.df));
  return r;
}

}  // namespace nilcmetrix
