#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace agarch {

enum class ModelKind { GARCH, QGARCH };

std::string_view to_string(ModelKind kind) noexcept;
ModelKind parse_model_kind(std::string_view text);

/// QGARCH(1,1) coefficients of
///   sigma_t^2 = omega + gamma*y_{t-1} + alpha*y_{t-1}^2 + beta*sigma_{t-1}^2.
/// Plain GARCH(1,1) is the gamma == 0 special case.
struct ModelParams {
  double omega = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  ModelKind kind = ModelKind::QGARCH;

  /// omega > 0, alpha >= 0, beta >= 0, alpha + beta < 1, gamma^2 <= 4*alpha*omega,
  /// and gamma == 0 for GARCH. The discriminant condition keeps the variance
  /// quadratic in y strictly positive for every possible return.
  [[nodiscard]] bool in_support() const noexcept;

  /// Number of free parameters: 3 for GARCH, 4 for QGARCH.
  [[nodiscard]] std::size_t dim() const noexcept;

  /// Free parameters in sampling order (omega, alpha, beta[, gamma]).
  [[nodiscard]] Eigen::VectorXd to_vector() const;
  static ModelParams from_vector(const Eigen::Ref<const Eigen::VectorXd>& theta,
                                 ModelKind kind);

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Parameter names in sampling order for a model kind.
std::vector<std::string_view> parameter_names(ModelKind kind);

/// Estimates for the three indexes analysed in the reference study. Handy as
/// simulation targets and for the news impact curve.
namespace presets {
inline constexpr ModelParams kNikkei225{0.06219, 0.07872, 0.89390, -0.12403, ModelKind::QGARCH};
inline constexpr ModelParams kDax{0.03004, 0.09198, 0.89564, -0.08483, ModelKind::QGARCH};
inline constexpr ModelParams kHangSeng{0.03202, 0.07638, 0.91168, -0.08678, ModelKind::QGARCH};
}  // namespace presets

/// Conditional variances sigma_t^2, one per observation.
struct VolatilityPath {
  std::vector<double> sigma_sq;
};

/// Throws DomainError if `params` is off support or sigma1_sq <= 0.
VolatilityPath volatility_path(const ModelParams& params, std::span<const double> returns,
                               double sigma1_sq);

/// Gaussian log-likelihood -1/2 * sum[ln(2 pi sigma_t^2) + y_t^2 / sigma_t^2].
double log_likelihood(const ModelParams& params, std::span<const double> returns,
                      double sigma1_sq);

/// Flat-prior log-posterior, unnormalized. Equals the log-likelihood on the
/// support and -infinity elsewhere.
double log_posterior(const ModelParams& params, std::span<const double> returns,
                     double sigma1_sq) noexcept;

/// omega / (1 - alpha - beta). Throws DomainError when alpha + beta >= 1.
double unconditional_variance(const ModelParams& params);

struct NewsImpactPoint {
  double y;
  double sigma_sq;
};

/// Conditional variance as a function of the previous return with the previous
/// variance held at the unconditional level.
std::vector<NewsImpactPoint> news_impact_curve(const ModelParams& params,
                                               std::span<const double> grid);

/// `points` evenly spaced values covering [lo, hi] inclusive.
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

/// Default initial variance: centered sample variance with divisor N.
double sample_variance(std::span<const double> returns);

/// Starting point for the warm-up chain: omega = 0.1*var(y), alpha = 0.1,
/// beta = 0.8, gamma = 0.
ModelParams default_theta0(ModelKind kind, std::span<const double> returns);

}  // namespace agarch
