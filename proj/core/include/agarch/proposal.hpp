#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "agarch/rng.hpp"

namespace agarch {

/// Sample mean M and unbiased second central moment V = E[(x - M)(x - M)^T].
struct MomentEstimate {
  Eigen::VectorXd mean;
  Eigen::MatrixXd second_central;
  std::size_t count = 0;
};

/// Streaming mean / covariance (Welford update). Produces the same estimate as
/// estimate_moments over everything pushed so far.
class MomentAccumulator {
 public:
  explicit MomentAccumulator(std::size_t dim);

  void push(const Eigen::Ref<const Eigen::VectorXd>& x);
  [[nodiscard]] std::size_t count() const noexcept { return count_; }
  [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(mean_.size()); }

  /// Throws InsufficientDataError with fewer than two samples.
  [[nodiscard]] MomentEstimate estimate() const;

 private:
  std::size_t count_ = 0;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd scatter_;
};

MomentEstimate estimate_moments(std::span<const Eigen::VectorXd> samples);

/// Multivariate Student's t density with location M, scale Sigma = L L^T and
/// nu degrees of freedom. Its covariance is nu/(nu-2) * Sigma.
class ProposalDensity {
 public:
  /// Takes Sigma directly. Throws DomainError on bad shapes, asymmetric Sigma or
  /// nu <= 2 and DegenerateCovarianceError if Sigma is not positive definite.
  ProposalDensity(Eigen::VectorXd mean, Eigen::MatrixXd sigma, double nu);

  [[nodiscard]] const Eigen::VectorXd& mean() const noexcept { return mean_; }
  [[nodiscard]] const Eigen::MatrixXd& sigma() const noexcept { return sigma_; }
  [[nodiscard]] const Eigen::MatrixXd& chol() const noexcept { return chol_; }
  [[nodiscard]] double nu() const noexcept { return nu_; }
  [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(mean_.size()); }
  /// Ridge added to Sigma during construction (0 when none was needed).
  [[nodiscard]] double jitter() const noexcept { return jitter_; }

  /// theta = L * Y * sqrt(nu / w) + M with Y ~ N(0, I), w ~ chi^2_nu.
  [[nodiscard]] Eigen::VectorXd draw(Rng& rng) const;

  /// Normalized log density. Throws DomainError on dimension mismatch.
  [[nodiscard]] double log_density(const Eigen::Ref<const Eigen::VectorXd>& theta) const;

 private:
  friend ProposalDensity build_proposal(const MomentEstimate&, double);
  ProposalDensity(Eigen::VectorXd mean, Eigen::MatrixXd sigma, double nu, bool regularize);

  Eigen::VectorXd mean_;
  Eigen::MatrixXd sigma_;
  Eigen::MatrixXd chol_;
  double nu_;
  double jitter_ = 0.0;
  double log_norm_ = 0.0;
};

/// Sigma = (nu - 2)/nu * V, so that the proposal's covariance matches V.
/// A singular or ill-conditioned V gets eps * I added, with
/// eps = 1e-8 * max(1, trace(V)/p) doubled up to ten times.
ProposalDensity build_proposal(const MomentEstimate& moments, double nu);

}  // namespace agarch
