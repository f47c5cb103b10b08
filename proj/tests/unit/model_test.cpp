#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "agarch/errors.hpp"
#include "agarch/model.hpp"
#include "oracles.hpp"

using namespace agarch;

namespace {

constexpr double kLn2Pi = 1.8378770664093454836;

// Uniform draw over a box, rejected until inside the support.
ModelParams random_in_support(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  while (true) {
    ModelParams p;
    p.omega = 0.01 + 2.0 * u(rng);
    p.alpha = 0.5 * u(rng);
    p.beta = u(rng);
    const double g_max = std::sqrt(4.0 * p.alpha * p.omega);
    p.gamma = g_max * (2.0 * u(rng) - 1.0);
    if (p.in_support()) return p;
  }
}

}  // namespace

TEST_CASE("support constraints") {
  CHECK(presets::kNikkei225.in_support());
  CHECK(presets::kDax.in_support());
  CHECK(presets::kHangSeng.in_support());
  CHECK_FALSE(ModelParams{0.0, 0.1, 0.1, 0.0}.in_support());
  CHECK_FALSE(ModelParams{1.0, -0.1, 0.1, 0.0}.in_support());
  CHECK_FALSE(ModelParams{1.0, 0.5, 0.5, 0.0}.in_support());
  CHECK_FALSE(ModelParams{1.0, 0.1, 0.2, 0.64}.in_support());  // gamma^2 > 4 alpha omega
  CHECK(ModelParams{1.0, 0.1, 0.2, 0.63}.in_support());
  CHECK_FALSE(ModelParams{1.0, 0.1, 0.2, 0.1, ModelKind::GARCH}.in_support());
  CHECK(ModelParams{1.0, 0.1, 0.2, 0.0, ModelKind::GARCH}.in_support());
}

TEST_CASE("vector round trip follows sampling order") {
  const auto v = presets::kNikkei225.to_vector();
  REQUIRE(v.size() == 4);
  CHECK(v(0) == presets::kNikkei225.omega);
  CHECK(v(3) == presets::kNikkei225.gamma);
  CHECK(ModelParams::from_vector(v, ModelKind::QGARCH) == presets::kNikkei225);
  const ModelParams g{0.2, 0.1, 0.7, 0.0, ModelKind::GARCH};
  CHECK(g.to_vector().size() == 3);
  CHECK(ModelParams::from_vector(g.to_vector(), ModelKind::GARCH) == g);
  CHECK_THROWS_AS(ModelParams::from_vector(v, ModelKind::GARCH), DomainError);
}

TEST_CASE("volatility_path hand recursions") {
  const std::vector<double> y{0.3, -1.2, 2.0, 0.0};
  const auto flat = volatility_path({0.1, 0.0, 0.0, 0.0}, y, 5.0);
  CHECK(flat.sigma_sq[0] == 5.0);
  for (std::size_t t = 1; t < y.size(); ++t) CHECK(flat.sigma_sq[t] == doctest::Approx(0.1));

  const std::vector<double> two{2.0, 0.0};
  CHECK(volatility_path({0.1, 0.5, 0.0, 0.0}, two, 1.0).sigma_sq[1] == doctest::Approx(2.1));

  const ModelParams asym{0.3, 0.2, 0.0, -0.1};
  const std::vector<double> up{1.0, 0.0};
  const std::vector<double> down{-1.0, 0.0};
  CHECK(volatility_path(asym, up, 1.0).sigma_sq[1] == doctest::Approx(0.4));
  CHECK(volatility_path(asym, down, 1.0).sigma_sq[1] == doctest::Approx(0.6));

  CHECK_THROWS_AS(volatility_path({1.0, 0.6, 0.6, 0.0}, y, 1.0), DomainError);
  CHECK_THROWS_AS(volatility_path(asym, y, 0.0), DomainError);
}

TEST_CASE("volatility_path stays positive anywhere in the support") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal(0.0, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    auto p = random_in_support(rng);
    // Put gamma on the discriminant boundary half of the time.
    if (trial % 2 == 0) p.gamma = -std::sqrt(4.0 * p.alpha * p.omega) * (1.0 - 1e-9);
    REQUIRE(p.in_support());
    std::vector<double> y(200);
    for (auto& v : y) v = normal(rng);
    // The quadratic's minimiser as an adversarial return.
    if (p.alpha > 0.0) y[50] = -p.gamma / (2.0 * p.alpha);
    const auto path = volatility_path(p, y, 1.0);
    for (double s2 : path.sigma_sq) REQUIRE(s2 > 0.0);
  }
}

TEST_CASE("log_likelihood hand values") {
  const ModelParams unit{1.0, 0.0, 0.0, 0.0};
  const std::vector<double> zero{0.0};
  CHECK(log_likelihood(unit, zero, 1.0) == doctest::Approx(-0.918938533204673).epsilon(1e-14));
  const std::vector<double> zeros{0.0, 0.0};
  CHECK(log_likelihood(unit, zeros, 1.0) == doctest::Approx(-kLn2Pi).epsilon(1e-14));
}

TEST_CASE("log_likelihood matches direct summation on random 20-point series") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> normal(0.0, 1.5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_in_support(rng);
    std::vector<double> y(20);
    for (auto& v : y) v = normal(rng);
    const double ours = log_likelihood(p, y, 1.3);
    const double ref = testing::naive_log_likelihood(p.omega, p.alpha, p.beta, p.gamma, y, 1.3);
    CHECK(std::abs(ours - ref) <= 1e-12 * std::abs(ref));
  }
}

TEST_CASE("log_likelihood scale covariance") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> scale(0.2, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_in_support(rng);
    const double c = scale(rng);
    std::vector<double> y(60), yc(60);
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = normal(rng);
      yc[i] = c * y[i];
    }
    ModelParams pc = p;
    pc.omega *= c * c;
    pc.gamma *= c;
    const double diff = log_likelihood(pc, yc, 0.7 * c * c) - log_likelihood(p, y, 0.7);
    CHECK(diff == doctest::Approx(-60.0 * std::log(c)).epsilon(1e-9));
  }
}

TEST_CASE("log_posterior is the likelihood on the support and -inf off it") {
  const std::vector<double> y{0.5, -1.0, 0.3, 2.2, -0.4};
  const auto& p = presets::kNikkei225;
  CHECK(log_posterior(p, y, 1.0) == log_likelihood(p, y, 1.0));
  const double ninf = -std::numeric_limits<double>::infinity();
  CHECK(log_posterior({0.1, 0.6, 0.6, 0.0}, y, 1.0) == ninf);
  CHECK(log_posterior({0.1, 0.1, 0.5, 0.3}, y, 1.0) == ninf);  // 0.09 > 0.04
  CHECK(log_posterior({-0.1, 0.1, 0.5, 0.0}, y, 1.0) == ninf);
  CHECK(log_posterior(p, y, -1.0) == ninf);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_in_support(rng);
    const auto b = random_in_support(rng);
    CHECK((log_posterior(a, y, 1.0) < log_posterior(b, y, 1.0)) ==
          (log_likelihood(a, y, 1.0) < log_likelihood(b, y, 1.0)));
  }
}

TEST_CASE("unconditional_variance") {
  CHECK(unconditional_variance({1.0, 0.0, 0.0, 0.0}) == 1.0);
  CHECK(unconditional_variance(presets::kNikkei225) ==
        doctest::Approx(0.06219 / 0.02738).epsilon(1e-12));
  CHECK(unconditional_variance(presets::kNikkei225) == doctest::Approx(2.2714).epsilon(1e-4));
  CHECK_THROWS_AS(unconditional_variance({1.0, 0.4, 0.6, 0.0}), DomainError);
}

TEST_CASE("news_impact_curve") {
  const auto grid = linear_grid(-5.0, 5.0, 201);
  CHECK(grid.size() == 201);
  CHECK(grid[100] == doctest::Approx(0.0));
  CHECK(grid.front() == -5.0);
  CHECK(grid.back() == 5.0);

  const ModelParams sym{0.05, 0.08, 0.9, 0.0};
  const auto curve = news_impact_curve(sym, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(curve[i].sigma_sq == doctest::Approx(curve[grid.size() - 1 - i].sigma_sq).epsilon(1e-14));
  }

  const std::vector<double> pts{-1.0, 0.0, 1.0};
  const auto nk = news_impact_curve(presets::kNikkei225, pts);
  const double s2 = unconditional_variance(presets::kNikkei225);
  CHECK(nk[0].sigma_sq == doctest::Approx(2.2954).epsilon(1e-4));
  CHECK(nk[2].sigma_sq == doctest::Approx(2.0473).epsilon(1e-4));
  CHECK(nk[1].sigma_sq == doctest::Approx(0.06219 + 0.89390 * s2).epsilon(1e-14));

  for (const auto& p : {presets::kNikkei225, presets::kDax, presets::kHangSeng}) {
    const auto c = news_impact_curve(p, grid);
    for (std::size_t i = 101; i < grid.size(); ++i) {
      CHECK(c[grid.size() - 1 - i].sigma_sq > c[i].sigma_sq);
    }
  }
  CHECK_THROWS_AS(news_impact_curve({1.0, 0.5, 0.5, 0.0}, grid), DomainError);
  CHECK_THROWS_AS(linear_grid(1.0, 1.0, 10), DomainError);
  CHECK_THROWS_AS(linear_grid(0.0, 1.0, 1), DomainError);
}

TEST_CASE("default starting point sits in the support") {
  const std::vector<double> y{1.0, -1.0, 2.0, -2.0};
  const auto t0 = default_theta0(ModelKind::QGARCH, y);
  CHECK(t0.in_support());
  CHECK(t0.omega == doctest::Approx(0.25));  // 0.1 * var with divisor N = 2.5
  CHECK(default_theta0(ModelKind::GARCH, y).in_support());
  const std::vector<double> flat{0.0, 0.0};
  CHECK_THROWS_AS(default_theta0(ModelKind::QGARCH, flat), DomainError);
}
