#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "agarch/data.hpp"
#include "agarch/model.hpp"
#include "agarch/proposal.hpp"
#include "agarch/rng.hpp"

namespace agarch {

/// Log of an unnormalized target density; -infinity marks zero density.
using LogTarget = std::function<double(const Eigen::VectorXd&)>;

struct WarmupOptions {
  double initial_step = 0.01;
  /// Step sizes are re-tuned every `tune_interval` iterations of the discarded
  /// segment: doubled above `upper_rate` acceptance, halved below `lower_rate`.
  std::size_t tune_interval = 200;
  double lower_rate = 0.4;
  double upper_rate = 0.6;
};

/// Random-walk Metropolis with independent Gaussian steps per component.
/// Runs n_discard + n_keep iterations and returns the last n_keep states;
/// rejected moves repeat the current state. Step sizes adapt only while
/// discarding. Throws DomainError if target(theta0) is not finite.
std::vector<Eigen::VectorXd> metropolis_warmup(const LogTarget& target,
                                               const Eigen::VectorXd& theta0,
                                               std::size_t n_keep, std::size_t n_discard,
                                               Rng& rng, const WarmupOptions& options = {});

struct MhStep {
  Eigen::VectorXd theta;
  double log_target;
  bool accepted;
};

/// Acceptance probability of the independence sampler computed in log space,
/// min(1, exp[(target' - target) + (log g(current) - log g(candidate))]).
double mh_acceptance_probability(double log_target_current, double log_target_candidate,
                                 double log_g_current, double log_g_candidate) noexcept;

/// One independence Metropolis-Hastings transition. `log_target_current` is
/// target(current), passed in to avoid re-evaluating it.
MhStep mh_step(const LogTarget& target, const ProposalDensity& proposal,
               const Eigen::VectorXd& current, double log_target_current, Rng& rng);

struct ChainConfig {
  std::size_t burn_in = 5000;
  std::size_t initial_pool = 1000;
  std::size_t update_interval = 1000;
  std::size_t total_samples = 100000;
  double nu = 10.0;
  std::uint64_t seed = 0;
  ModelKind kind = ModelKind::QGARCH;
  /// Defaults to default_theta0 for the data.
  std::optional<ModelParams> theta0;
  /// Defaults to the sample variance of the returns.
  std::optional<double> sigma1_sq;
  /// Stop rebuilding the proposal once this many adaptive-phase samples exist.
  std::optional<std::size_t> freeze_after;
  WarmupOptions warmup;

  /// Throws DomainError on zero counts or nu <= 2.
  void validate() const;
};

struct MomentSnapshot {
  /// Number of adaptive-phase samples drawn when the proposal was rebuilt.
  std::size_t mc_time;
  Eigen::VectorXd mean;
  Eigen::MatrixXd second_central;
};

struct ChainResult {
  ModelKind kind = ModelKind::QGARCH;
  std::vector<Eigen::VectorXd> samples;
  std::vector<Eigen::VectorXd> warmup_samples;
  /// Fraction accepted in each complete window of update_interval proposals.
  std::vector<double> acceptance_trace;
  std::vector<MomentSnapshot> moment_trace;
  double sigma1_sq = 0.0;
  double nu = 0.0;
  std::size_t update_interval = 0;

  /// Column `param` of the samples.
  [[nodiscard]] std::vector<double> column(std::size_t param) const;
};

/// Called after each completed acceptance window with (window index, fraction).
using WindowCallback = std::function<void(std::size_t, double)>;

/// Warm-up, then independence MH with a Student's t proposal rebuilt every
/// update_interval iterations from the initial pool plus all adaptive samples.
ChainResult run_adaptive(const ChainConfig& config, const ReturnSeries& returns,
                         const WindowCallback& on_window = {});

}  // namespace agarch
