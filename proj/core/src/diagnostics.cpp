#include "agarch/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "agarch/errors.hpp"

namespace agarch {
namespace {

bool is_constant(std::span<const double> series) {
  return std::all_of(series.begin(), series.end(), [&](double v) { return v == series[0]; });
}

struct Centered {
  std::vector<double> values;
  double variance;  // divisor N
};

Centered center(std::span<const double> series) {
  if (is_constant(series)) throw DegenerateSeriesError("series is constant");
  const double m = mean(series);
  Centered c;
  c.values.resize(series.size());
  double ss = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    c.values[i] = series[i] - m;
    ss += c.values[i] * c.values[i];
  }
  c.variance = ss / static_cast<double>(series.size());
  if (!(c.variance > 0.0)) throw DegenerateSeriesError("series is constant");
  return c;
}

double autocovariance(const std::vector<double>& x, std::size_t lag) {
  double sum = 0.0;
  for (std::size_t j = 0; j + lag < x.size(); ++j) sum += x[j] * x[j + lag];
  return sum / static_cast<double>(x.size());
}

}  // namespace

double mean(std::span<const double> series) {
  if (series.empty()) throw InsufficientDataError("empty series");
  // Accumulate offsets from the first value so a constant series is exact.
  const double shift = series[0];
  double sum = 0.0;
  for (double v : series) sum += v - shift;
  return shift + sum / static_cast<double>(series.size());
}

double standard_deviation(std::span<const double> series) {
  if (series.size() < 2 || is_constant(series)) return 0.0;
  const double m = mean(series);
  double ss = 0.0;
  for (double v : series) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(series.size() - 1));
}

std::vector<double> acf(std::span<const double> series, std::size_t max_lag) {
  if (max_lag < 1 || series.size() <= max_lag) {
    throw DomainError("acf needs 1 <= max_lag < N (max_lag=" + std::to_string(max_lag) +
                      ", N=" + std::to_string(series.size()) + ")");
  }
  const auto c = center(series);
  std::vector<double> out(max_lag + 1);
  out[0] = 1.0;
  for (std::size_t t = 1; t <= max_lag; ++t) out[t] = autocovariance(c.values, t) / c.variance;
  return out;
}

AutocorrTime integrated_autocorr_time(std::span<const double> series, double window_factor) {
  if (series.size() < 100) {
    throw DomainError("autocorrelation time needs at least 100 points, got " +
                      std::to_string(series.size()));
  }
  const auto c = center(series);
  const std::size_t n = series.size();
  double tau = 0.5;
  for (std::size_t w = 1; w < n / 2; ++w) {
    tau += autocovariance(c.values, w) / c.variance;
    if (static_cast<double>(w) >= window_factor * tau) {
      const double err =
          tau * std::sqrt(2.0 * (2.0 * static_cast<double>(w) + 1.0) / static_cast<double>(n));
      return {tau, err, w};
    }
  }
  throw NonConvergenceError("autocorrelation window not found below N/2 (N=" +
                            std::to_string(n) + ")");
}

double jackknife_se(std::span<const double> series, std::size_t n_blocks) {
  const std::size_t n = series.size();
  if (n_blocks < 2 || n < 2 * n_blocks) {
    throw DomainError("jackknife needs at least 2 blocks of 2 samples (N=" + std::to_string(n) +
                      ", blocks=" + std::to_string(n_blocks) + ")");
  }
  // Work relative to the first value: a constant series then gives exactly 0.
  const double shift = series[0];
  std::vector<double> block_sum(n_blocks, 0.0);
  std::vector<std::size_t> block_len(n_blocks, 0);
  double total = 0.0;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    const std::size_t lo = b * n / n_blocks;
    const std::size_t hi = (b + 1) * n / n_blocks;
    for (std::size_t i = lo; i < hi; ++i) block_sum[b] += series[i] - shift;
    block_len[b] = hi - lo;
    total += block_sum[b];
  }
  std::vector<double> loo(n_blocks);
  double loo_mean = 0.0;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    loo[b] = (total - block_sum[b]) / static_cast<double>(n - block_len[b]);
    loo_mean += loo[b];
  }
  loo_mean /= static_cast<double>(n_blocks);
  double ss = 0.0;
  for (double m : loo) ss += (m - loo_mean) * (m - loo_mean);
  const double nb = static_cast<double>(n_blocks);
  return std::sqrt((nb - 1.0) / nb * ss);
}

bool SummaryReport::se_consistent() const {
  return std::all_of(parameters.begin(), parameters.end(), [](const ParameterSummary& p) {
    return !p.se_consistency || (*p.se_consistency >= 0.5 && *p.se_consistency <= 2.0);
  });
}

SummaryReport summarize(const ChainResult& result, const ReturnSeries& returns,
                        std::size_t n_blocks) {
  if (result.samples.empty()) throw InsufficientDataError("chain has no samples");
  SummaryReport report;
  report.n_samples = result.samples.size();
  report.n_observations = returns.size();
  report.jackknife_blocks = n_blocks;

  const auto names = parameter_names(result.kind);
  const double n = static_cast<double>(result.samples.size());
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto column = result.column(k);
    ParameterSummary s;
    s.name = std::string(names[k]);
    s.mean = mean(column);
    s.sd = standard_deviation(column);
    s.jackknife_se = jackknife_se(column, n_blocks);
    if (s.sd > 0.0) {
      const auto tau = integrated_autocorr_time(column);
      s.two_tau_int = 2.0 * tau.tau_int;
      s.two_tau_int_error = 2.0 * tau.error;
      const double predicted = std::sqrt(*s.two_tau_int / n) * s.sd;
      if (predicted > 0.0) s.se_consistency = s.jackknife_se / predicted;
    }
    report.parameters.push_back(std::move(s));
  }

  const auto& trace = result.acceptance_trace;
  if (!trace.empty()) {
    const std::size_t k = std::min<std::size_t>(10, trace.size());
    double sum = 0.0;
    for (std::size_t i = trace.size() - k; i < trace.size(); ++i) sum += trace[i];
    report.acceptance_plateau = sum / static_cast<double>(k);
  }
  return report;
}

}  // namespace agarch
