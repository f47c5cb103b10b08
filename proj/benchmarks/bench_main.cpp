#include <benchmark/benchmark.h>

#include <vector>

#include "agarch/data.hpp"
#include "agarch/diagnostics.hpp"
#include "agarch/model.hpp"
#include "agarch/proposal.hpp"
#include "agarch/sampler.hpp"

using namespace agarch;

namespace {

const ReturnSeries& nikkei_like(std::size_t n) {
  static const auto series = simulate_qgarch(presets::kNikkei225, 100000, 2.27, 1);
  static ReturnSeries cut;
  cut.values.assign(series.values.begin(), series.values.begin() + static_cast<long>(n));
  return cut;
}

ProposalDensity sample_proposal() {
  Eigen::Matrix4d v;
  v << 1.7e-4, -0.4e-4, 0.3e-4, 0.5e-4,
       -0.4e-4, 1.2e-4, -1.0e-4, -0.2e-4,
       0.3e-4, -1.0e-4, 1.6e-4, 0.1e-4,
       0.5e-4, -0.2e-4, 0.1e-4, 4.4e-4;
  return build_proposal(MomentEstimate{presets::kNikkei225.to_vector(), v, 0}, 10.0);
}

}  // namespace

static void BM_LogPosterior(benchmark::State& state) {
  const auto y = nikkei_like(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_posterior(presets::kNikkei225, y.values, 2.27));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LogPosterior)->Arg(1000)->Arg(2700)->Arg(10000);

static void BM_ProposalDraw(benchmark::State& state) {
  const auto g = sample_proposal();
  auto rng = make_stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(g.draw(rng));
}
BENCHMARK(BM_ProposalDraw);

static void BM_ProposalLogDensity(benchmark::State& state) {
  const auto g = sample_proposal();
  const Eigen::VectorXd x = presets::kDax.to_vector();
  for (auto _ : state) benchmark::DoNotOptimize(g.log_density(x));
}
BENCHMARK(BM_ProposalLogDensity);

static void BM_MhStep(benchmark::State& state) {
  const auto y = nikkei_like(2700);
  const auto g = sample_proposal();
  const LogTarget target = [&](const Eigen::VectorXd& t) {
    return log_posterior(ModelParams::from_vector(t, ModelKind::QGARCH), y.values, 2.27);
  };
  auto rng = make_stream(2, 0);
  Eigen::VectorXd cur = presets::kNikkei225.to_vector();
  double lt = target(cur);
  for (auto _ : state) {
    auto s = mh_step(target, g, cur, lt, rng);
    cur = std::move(s.theta);
    lt = s.log_target;
  }
}
BENCHMARK(BM_MhStep);

static void BM_AutocorrTime(benchmark::State& state) {
  const auto& y = nikkei_like(100000);
  for (auto _ : state) benchmark::DoNotOptimize(integrated_autocorr_time(y.values));
}
BENCHMARK(BM_AutocorrTime);

static void BM_Jackknife(benchmark::State& state) {
  const auto& y = nikkei_like(100000);
  for (auto _ : state) benchmark::DoNotOptimize(jackknife_se(y.values, 50));
}
BENCHMARK(BM_Jackknife);
BENCHMARK_MAIN();
