#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agarch/data.hpp"
#include "agarch/sampler.hpp"

namespace agarch {

/// Normalized autocorrelation for lags 0..max_lag. Both the lagged
/// covariances and the variance use divisor N, so ACF(0) == 1.
/// Throws DomainError unless N > max_lag >= 1, DegenerateSeriesError on a
/// constant series.
std::vector<double> acf(std::span<const double> series, std::size_t max_lag);

struct AutocorrTime {
  double tau_int;
  double error;
  std::size_t window;
};

/// tau_int = 1/2 + sum_{i=1..W} ACF(i), where W is the first lag with
/// W >= window_factor * tau_int(W). error = tau_int * sqrt(2(2W+1)/N).
/// Throws DomainError below 100 points, DegenerateSeriesError on a constant
/// series, NonConvergenceError if no window exists below N/2.
AutocorrTime integrated_autocorr_time(std::span<const double> series,
                                      double window_factor = 6.0);

/// Delete-one-block jackknife standard error of the mean over n_blocks
/// contiguous blocks. Throws DomainError unless n_blocks >= 2 and
/// N >= 2 * n_blocks.
double jackknife_se(std::span<const double> series, std::size_t n_blocks = 50);

double mean(std::span<const double> series);
/// Sample standard deviation with divisor N - 1 (0 for fewer than 2 points).
double standard_deviation(std::span<const double> series);

struct ParameterSummary {
  std::string name;
  double mean = 0.0;
  double sd = 0.0;
  double jackknife_se = 0.0;
  /// Empty when the column is constant.
  std::optional<double> two_tau_int;
  std::optional<double> two_tau_int_error;
  /// jackknife_se / (sqrt(2 tau_int / N) * sd); empty when undefined.
  std::optional<double> se_consistency;
};

struct SummaryReport {
  std::vector<ParameterSummary> parameters;
  std::size_t n_samples = 0;
  std::size_t n_observations = 0;
  /// Mean of the last (up to) ten acceptance windows.
  std::optional<double> acceptance_plateau;
  std::size_t jackknife_blocks = 0;

  /// True when every defined se_consistency ratio lies in [0.5, 2].
  [[nodiscard]] bool se_consistent() const;
};

SummaryReport summarize(const ChainResult& result, const ReturnSeries& returns,
                        std::size_t n_blocks = 50);

}  // namespace agarch
