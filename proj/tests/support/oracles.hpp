#pragma once

// Reference computations kept independent of the library code paths they
// check. Nothing here calls into agarch beyond plain data types.

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace agarch::testing {

/// Gaussian QGARCH log-likelihood written out term by term.
inline double naive_log_likelihood(double omega, double alpha, double beta, double gamma,
                                   const std::vector<double>& y, double sigma1_sq) {
  const double pi = 3.14159265358979323846;
  std::vector<double> s2(y.size());
  for (std::size_t t = 0; t < y.size(); ++t) {
    s2[t] = t == 0 ? sigma1_sq
                   : omega + gamma * y[t - 1] + alpha * y[t - 1] * y[t - 1] + beta * s2[t - 1];
  }
  double ll = 0.0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    ll += -0.5 * std::log(2.0 * pi * s2[t]) - 0.5 * y[t] * y[t] / s2[t];
  }
  return ll;
}

/// Composite Simpson rule with an even number of intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      std::size_t intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / static_cast<double>(intervals);
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < intervals; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
  }
  return sum * h / 3.0;
}

/// Stationary AR(1) x_t = rho x_{t-1} + e_t with unit innovations.
inline std::vector<double> ar1_series(double rho, std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> x(n);
  x[0] = normal(rng) / std::sqrt(1.0 - rho * rho);
  for (std::size_t t = 1; t < n; ++t) x[t] = rho * x[t - 1] + normal(rng);
  return x;
}

inline std::vector<double> iid_normal(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> x(n);
  for (auto& v : x) v = normal(rng);
  return x;
}

inline double plain_mean(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

inline double plain_variance(const std::vector<double>& x) {
  const double m = plain_mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

/// Kurtosis m4 / m2^2 (3 for a Gaussian).
inline double kurtosis(const std::vector<double>& x) {
  const double m = plain_mean(x);
  double m2 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = (v - m) * (v - m);
    m2 += d;
    m4 += d * d;
  }
  m2 /= static_cast<double>(x.size());
  m4 /= static_cast<double>(x.size());
  return m4 / (m2 * m2);
}

}  // namespace agarch::testing
