#include "agarch/sampler.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "agarch/errors.hpp"

namespace agarch {

std::vector<Eigen::VectorXd> metropolis_warmup(const LogTarget& target,
                                               const Eigen::VectorXd& theta0,
                                               std::size_t n_keep, std::size_t n_discard,
                                               Rng& rng, const WarmupOptions& options) {
  double current_lp = target(theta0);
  if (!std::isfinite(current_lp)) {
    throw DomainError("warm-up start point has zero posterior density");
  }
  const Eigen::Index p = theta0.size();
  Eigen::VectorXd current = theta0;
  Eigen::VectorXd step = Eigen::VectorXd::Constant(p, options.initial_step);
  std::vector<std::size_t> accepted(static_cast<std::size_t>(p), 0);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;

  std::vector<Eigen::VectorXd> kept;
  kept.reserve(n_keep);
  const std::size_t total = n_discard + n_keep;
  for (std::size_t it = 1; it <= total; ++it) {
    // One iteration is a systematic sweep of single-component updates.
    for (Eigen::Index k = 0; k < p; ++k) {
      Eigen::VectorXd candidate = current;
      candidate(k) += step(k) * normal(rng);
      const double lp = target(candidate);
      const double diff = lp - current_lp;
      if (diff >= 0.0 || std::log(uniform(rng)) < diff) {
        current = std::move(candidate);
        current_lp = lp;
        ++accepted[static_cast<std::size_t>(k)];
      }
    }
    if (it <= n_discard && options.tune_interval > 0 && it % options.tune_interval == 0) {
      for (Eigen::Index k = 0; k < p; ++k) {
        auto& count = accepted[static_cast<std::size_t>(k)];
        const double rate =
            static_cast<double>(count) / static_cast<double>(options.tune_interval);
        if (rate > options.upper_rate) {
          step(k) *= 2.0;
        } else if (rate < options.lower_rate) {
          step(k) *= 0.5;
        }
        count = 0;
      }
    }
    if (it > n_discard) kept.push_back(current);
  }
  return kept;
}

double mh_acceptance_probability(double log_target_current, double log_target_candidate,
                                 double log_g_current, double log_g_candidate) noexcept {
  const double log_ratio =
      (log_target_candidate - log_target_current) + (log_g_current - log_g_candidate);
  if (std::isnan(log_ratio)) return 0.0;
  if (log_ratio >= 0.0) return 1.0;
  return std::exp(log_ratio);
}

MhStep mh_step(const LogTarget& target, const ProposalDensity& proposal,
               const Eigen::VectorXd& current, double log_target_current, Rng& rng) {
  Eigen::VectorXd candidate = proposal.draw(rng);
  const double lt_candidate = target(candidate);
  double prob = 0.0;
  if (lt_candidate != -std::numeric_limits<double>::infinity()) {
    prob = mh_acceptance_probability(log_target_current, lt_candidate,
                                     proposal.log_density(current),
                                     proposal.log_density(candidate));
  }
  std::uniform_real_distribution<double> uniform;
  const double u = uniform(rng);
  if (prob >= 1.0 || u < prob) return {std::move(candidate), lt_candidate, true};
  return {current, log_target_current, false};
}

void ChainConfig::validate() const {
  if (burn_in == 0 || update_interval == 0 || total_samples == 0) {
    throw DomainError("burn-in, update interval and sample count must be at least 1");
  }
  if (initial_pool < 2) throw DomainError("initial pool needs at least 2 samples");
  if (!(nu > 2.0) || !std::isfinite(nu)) throw DomainError("nu must exceed 2");
  if (theta0 && theta0->kind != kind) {
    throw DomainError("starting point model kind differs from configured kind");
  }
  if (sigma1_sq && !(*sigma1_sq > 0.0 && std::isfinite(*sigma1_sq))) {
    throw DomainError("initial variance must be positive and finite");
  }
}

std::vector<double> ChainResult::column(std::size_t param) const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s(static_cast<Eigen::Index>(param)));
  return out;
}

ChainResult run_adaptive(const ChainConfig& config, const ReturnSeries& returns,
                         const WindowCallback& on_window) {
  config.validate();
  if (returns.size() == 0) throw InsufficientDataError("return series is empty");

  const std::span<const double> y(returns.values);
  const double sigma1_sq = config.sigma1_sq ? *config.sigma1_sq : sample_variance(y);
  if (!(sigma1_sq > 0.0)) throw DomainError("return series has zero variance");
  const ModelKind kind = config.kind;
  const ModelParams theta0 = config.theta0 ? *config.theta0 : default_theta0(kind, y);

  const LogTarget target = [&](const Eigen::VectorXd& theta) {
    return log_posterior(ModelParams::from_vector(theta, kind), y, sigma1_sq);
  };

  ChainResult result;
  result.kind = kind;
  result.sigma1_sq = sigma1_sq;
  result.nu = config.nu;
  result.update_interval = config.update_interval;

  auto warmup_rng = make_stream(config.seed, streams::kWarmup);
  result.warmup_samples = metropolis_warmup(target, theta0.to_vector(), config.initial_pool,
                                            config.burn_in, warmup_rng, config.warmup);

  MomentAccumulator moments(theta0.dim());
  for (const auto& s : result.warmup_samples) moments.push(s);
  auto estimate = moments.estimate();
  auto proposal = build_proposal(estimate, config.nu);
  result.moment_trace.push_back({0, estimate.mean, estimate.second_central});

  Eigen::VectorXd current = result.warmup_samples.back();
  double current_lt = target(current);
  auto rng = make_stream(config.seed, streams::kAdaptive);
  result.samples.reserve(config.total_samples);
  std::size_t window_accepts = 0;

  for (std::size_t i = 1; i <= config.total_samples; ++i) {
    auto step = mh_step(target, proposal, current, current_lt, rng);
    if (step.accepted) {
      ++window_accepts;
      current = std::move(step.theta);
      current_lt = step.log_target;
    }
    result.samples.push_back(current);
    moments.push(current);

    if (i % config.update_interval != 0) continue;
    const double fraction =
        static_cast<double>(window_accepts) / static_cast<double>(config.update_interval);
    result.acceptance_trace.push_back(fraction);
    window_accepts = 0;
    if (on_window) on_window(result.acceptance_trace.size() - 1, fraction);

    if (config.freeze_after && i > *config.freeze_after) continue;
    estimate = moments.estimate();
    proposal = build_proposal(estimate, config.nu);
    result.moment_trace.push_back({i, estimate.mean, estimate.second_central});
  }
  return result;
}

}  // namespace agarch
