#include "agarch/proposal.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "agarch/errors.hpp"

namespace agarch {
namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr int kMaxJitterDoublings = 10;

bool is_symmetric(const Eigen::MatrixXd& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= kSymmetryTol * scale;
}

// Cholesky factor of `sigma`, or nullopt when it is not numerically positive
// definite.
std::optional<Eigen::MatrixXd> try_cholesky(const Eigen::MatrixXd& sigma) {
  if (!sigma.allFinite()) return std::nullopt;
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) return std::nullopt;
  Eigen::MatrixXd l = llt.matrixL();
  const Eigen::VectorXd diag = l.diagonal();
  if (!(diag.array() > 0.0).all() || !l.allFinite()) return std::nullopt;
  // Reject factors whose reconstruction has lost precision.
  const double tol = 1e-10 * std::max(1.0, sigma.cwiseAbs().maxCoeff());
  if ((l * l.transpose() - sigma).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  return l;
}

}  // namespace

MomentAccumulator::MomentAccumulator(std::size_t dim)
    : mean_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim))),
      scatter_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                     static_cast<Eigen::Index>(dim))) {}

void MomentAccumulator::push(const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != mean_.size()) {
    throw DomainError("sample has dimension " + std::to_string(x.size()) + ", expected " +
                      std::to_string(mean_.size()));
  }
  ++count_;
  const Eigen::VectorXd delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  scatter_.noalias() += delta * (x - mean_).transpose();
}

MomentEstimate MomentAccumulator::estimate() const {
  if (count_ < 2) throw InsufficientDataError("need at least 2 samples to estimate moments");
  MomentEstimate m;
  m.mean = mean_;
  m.second_central = scatter_ / static_cast<double>(count_ - 1);
  // The Welford scatter update is only symmetric up to rounding.
  m.second_central = 0.5 * (m.second_central + m.second_central.transpose()).eval();
  m.count = count_;
  return m;
}

MomentEstimate estimate_moments(std::span<const Eigen::VectorXd> samples) {
  if (samples.size() < 2) throw InsufficientDataError("need at least 2 samples to estimate moments");
  MomentAccumulator acc(static_cast<std::size_t>(samples.front().size()));
  for (const auto& s : samples) acc.push(s);
  return acc.estimate();
}

ProposalDensity::ProposalDensity(Eigen::VectorXd mean, Eigen::MatrixXd sigma, double nu)
    : ProposalDensity(std::move(mean), std::move(sigma), nu, false) {}

ProposalDensity::ProposalDensity(Eigen::VectorXd mean, Eigen::MatrixXd sigma, double nu,
                                 bool regularize)
    : mean_(std::move(mean)), sigma_(std::move(sigma)), nu_(nu) {
  const Eigen::Index p = mean_.size();
  if (p == 0) throw DomainError("proposal dimension must be positive");
  if (sigma_.rows() != p || sigma_.cols() != p) {
    throw DomainError("scale matrix shape does not match mean dimension");
  }
  if (!(nu_ > 2.0) || !std::isfinite(nu_)) {
    throw DomainError("degrees of freedom must exceed 2");
  }
  if (!mean_.allFinite()) throw DomainError("proposal mean is not finite");
  if (!is_symmetric(sigma_)) throw DomainError("scale matrix is not symmetric");

  auto l = try_cholesky(sigma_);
  if (!l && regularize) {
    // Scale the ridge by trace(V)/p, where V = nu/(nu-2) * Sigma.
    const double mean_var = sigma_.trace() * nu_ / (nu_ - 2.0) / static_cast<double>(p);
    double eps = 1e-8 * std::max(1.0, mean_var);
    const Eigen::MatrixXd base = sigma_;
    for (int i = 0; i <= kMaxJitterDoublings && !l; ++i, eps *= 2.0) {
      sigma_ = base + eps * Eigen::MatrixXd::Identity(p, p);
      l = try_cholesky(sigma_);
      if (l) jitter_ = eps;
    }
  }
  if (!l) {
    throw DegenerateCovarianceError("proposal scale matrix is not positive definite");
  }
  chol_ = std::move(*l);

  const double dp = static_cast<double>(p);
  const double log_det_half = chol_.diagonal().array().log().sum();
  log_norm_ = std::lgamma(0.5 * (nu_ + dp)) - std::lgamma(0.5 * nu_) - log_det_half -
              0.5 * dp * std::log(nu_ * std::numbers::pi);
}

Eigen::VectorXd ProposalDensity::draw(Rng& rng) const {
  std::normal_distribution<double> normal;
  std::chi_squared_distribution<double> chi2(nu_);
  Eigen::VectorXd y(mean_.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = normal(rng);
  const double w = chi2(rng);
  const Eigen::VectorXd x = y * std::sqrt(nu_ / w);
  return chol_.triangularView<Eigen::Lower>() * x + mean_;
}

double ProposalDensity::log_density(const Eigen::Ref<const Eigen::VectorXd>& theta) const {
  if (theta.size() != mean_.size()) {
    throw DomainError("point has dimension " + std::to_string(theta.size()) + ", expected " +
                      std::to_string(mean_.size()));
  }
  // x = L^{-1}(theta - M), so (theta - M)^T Sigma^{-1} (theta - M) = |x|^2.
  const Eigen::VectorXd x = chol_.triangularView<Eigen::Lower>().solve(theta - mean_);
  const double dp = static_cast<double>(mean_.size());
  return log_norm_ - 0.5 * (nu_ + dp) * std::log1p(x.squaredNorm() / nu_);
}

ProposalDensity build_proposal(const MomentEstimate& moments, double nu) {
  if (!(nu > 2.0) || !std::isfinite(nu)) throw DomainError("degrees of freedom must exceed 2");
  if (!is_symmetric(moments.second_central)) {
    throw DomainError("second central moment matrix is not symmetric");
  }
  Eigen::MatrixXd sigma = ((nu - 2.0) / nu) * moments.second_central;
  return ProposalDensity(moments.mean, std::move(sigma), nu, true);
}

}  // namespace agarch
