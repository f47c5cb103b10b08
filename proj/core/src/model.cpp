#include "agarch/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "agarch/errors.hpp"

namespace agarch {

std::string_view to_string(ModelKind kind) noexcept {
  return kind == ModelKind::GARCH ? "garch" : "qgarch";
}

ModelKind parse_model_kind(std::string_view text) {
  if (text == "garch") return ModelKind::GARCH;
  if (text == "qgarch") return ModelKind::QGARCH;
  throw DomainError("unknown model kind '" + std::string(text) + "'");
}

bool ModelParams::in_support() const noexcept {
  if (!(std::isfinite(omega) && std::isfinite(alpha) && std::isfinite(beta) &&
        std::isfinite(gamma))) {
    return false;
  }
  if (kind == ModelKind::GARCH && gamma != 0.0) return false;
  return omega > 0.0 && alpha >= 0.0 && beta >= 0.0 && alpha + beta < 1.0 &&
         gamma * gamma <= 4.0 * alpha * omega;
}

std::size_t ModelParams::dim() const noexcept { return kind == ModelKind::GARCH ? 3 : 4; }

Eigen::VectorXd ModelParams::to_vector() const {
  Eigen::VectorXd theta(static_cast<Eigen::Index>(dim()));
  theta(0) = omega;
  theta(1) = alpha;
  theta(2) = beta;
  if (kind == ModelKind::QGARCH) theta(3) = gamma;
  return theta;
}

ModelParams ModelParams::from_vector(const Eigen::Ref<const Eigen::VectorXd>& theta,
                                     ModelKind kind) {
  const Eigen::Index expected = kind == ModelKind::GARCH ? 3 : 4;
  if (theta.size() != expected) {
    throw DomainError("parameter vector has dimension " + std::to_string(theta.size()) +
                      ", expected " + std::to_string(expected));
  }
  ModelParams p;
  p.kind = kind;
  p.omega = theta(0);
  p.alpha = theta(1);
  p.beta = theta(2);
  p.gamma = kind == ModelKind::QGARCH ? theta(3) : 0.0;
  return p;
}

std::vector<std::string_view> parameter_names(ModelKind kind) {
  if (kind == ModelKind::GARCH) return {"omega", "alpha", "beta"};
  return {"omega", "alpha", "beta", "gamma"};
}

namespace {

void require_support(const ModelParams& params) {
  if (!params.in_support()) {
    throw DomainError("parameters outside support (omega=" + std::to_string(params.omega) +
                      ", alpha=" + std::to_string(params.alpha) +
                      ", beta=" + std::to_string(params.beta) +
                      ", gamma=" + std::to_string(params.gamma) + ")");
  }
}

void require_stationary(const ModelParams& params) {
  if (!(params.alpha + params.beta < 1.0)) {
    throw DomainError("alpha + beta must be < 1 for a finite unconditional variance");
  }
}

// Shared by log_likelihood and log_posterior; assumes validated inputs.
double log_likelihood_unchecked(const ModelParams& p, std::span<const double> y,
                                double sigma1_sq) {
  constexpr double kLog2Pi = 1.8378770664093454836;  // ln(2*pi)
  double sum = 0.0;
  double s2 = sigma1_sq;
  for (std::size_t t = 0; t < y.size(); ++t) {
    if (t > 0) {
      const double prev = y[t - 1];
      s2 = p.omega + p.gamma * prev + p.alpha * prev * prev + p.beta * s2;
    }
    sum += std::log(s2) + y[t] * y[t] / s2;
  }
  return -0.5 * (static_cast<double>(y.size()) * kLog2Pi + sum);
}

}  // namespace

VolatilityPath volatility_path(const ModelParams& params, std::span<const double> returns,
                               double sigma1_sq) {
  require_support(params);
  if (!(sigma1_sq > 0.0) || !std::isfinite(sigma1_sq)) {
    throw DomainError("initial variance must be positive and finite");
  }
  VolatilityPath path;
  path.sigma_sq.resize(returns.size());
  if (returns.empty()) return path;
  path.sigma_sq[0] = sigma1_sq;
  for (std::size_t t = 1; t < returns.size(); ++t) {
    const double prev = returns[t - 1];
    path.sigma_sq[t] = params.omega + params.gamma * prev + params.alpha * prev * prev +
                       params.beta * path.sigma_sq[t - 1];
  }
  return path;
}

double log_likelihood(const ModelParams& params, std::span<const double> returns,
                      double sigma1_sq) {
  require_support(params);
  if (!(sigma1_sq > 0.0) || !std::isfinite(sigma1_sq)) {
    throw DomainError("initial variance must be positive and finite");
  }
  return log_likelihood_unchecked(params, returns, sigma1_sq);
}

double log_posterior(const ModelParams& params, std::span<const double> returns,
                     double sigma1_sq) noexcept {
  if (!params.in_support() || !(sigma1_sq > 0.0) || !std::isfinite(sigma1_sq)) {
    return -std::numeric_limits<double>::infinity();
  }
  return log_likelihood_unchecked(params, returns, sigma1_sq);
}

double unconditional_variance(const ModelParams& params) {
  require_stationary(params);
  return params.omega / (1.0 - params.alpha - params.beta);
}

std::vector<NewsImpactPoint> news_impact_curve(const ModelParams& params,
                                               std::span<const double> grid) {
  const double base = params.omega + params.beta * unconditional_variance(params);
  std::vector<NewsImpactPoint> curve;
  curve.reserve(grid.size());
  for (double y : grid) {
    curve.push_back({y, base + params.gamma * y + params.alpha * y * y});
  }
  return curve;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
  if (!(lo < hi) || points < 2) {
    throw DomainError("grid needs lo < hi and at least 2 points");
  }
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

double sample_variance(std::span<const double> returns) {
  if (returns.empty()) throw InsufficientDataError("empty return series");
  double m = 0.0;
  for (double y : returns) m += y;
  m /= static_cast<double>(returns.size());
  double ss = 0.0;
  for (double y : returns) ss += (y - m) * (y - m);
  return ss / static_cast<double>(returns.size());
}

ModelParams default_theta0(ModelKind kind, std::span<const double> returns) {
  const double var = sample_variance(returns);
  if (!(var > 0.0)) throw DomainError("return series has zero variance");
  return ModelParams{0.1 * var, 0.1, 0.8, 0.0, kind};
}

}  // namespace agarch
