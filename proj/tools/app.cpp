#include "app.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "agarch/errors.hpp"
#include "agarch/io.hpp"
#include "agarch/model.hpp"

namespace agarch::app {
namespace {

namespace fs = std::filesystem;

ReturnSeries load_input(const RunManifest& m) {
  std::ifstream in(m.input);
  if (!in) throw Error("cannot open input file " + m.input.string());
  if (m.input_kind == InputKind::Returns) return load_returns(in);
  return to_returns(load_prices(in, m.column));
}

template <typename Writer>
void emit(const fs::path& path, Writer&& writer) {
  std::ostringstream buf;
  writer(buf);
  io::write_file_atomic(path, buf.str());
}

ColumnSelector parse_column(const std::string& text) {
  std::size_t index = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, index);
  if (!text.empty() && ec == std::errc{} && ptr == end) return index;
  return text;
}

const std::map<std::string, ModelParams>& preset_table() {
  static const std::map<std::string, ModelParams> table{
      {"nikkei", presets::kNikkei225},
      {"dax", presets::kDax},
      {"hangseng", presets::kHangSeng},
  };
  return table;
}

// Parameter options shared by simulate and nic.
struct ParamOptions {
  std::string preset;
  std::optional<double> omega, alpha, beta, gamma;
  std::string model = "qgarch";

  void add_to(CLI::App& cmd) {
    cmd.add_option("--preset", preset, "Start from a published estimate")
        ->check(CLI::IsMember({"nikkei", "dax", "hangseng"}));
    cmd.add_option("--omega", omega);
    cmd.add_option("--alpha", alpha);
    cmd.add_option("--beta", beta);
    cmd.add_option("--gamma", gamma);
    cmd.add_option("--model", model)->check(CLI::IsMember({"garch", "qgarch"}));
  }

  [[nodiscard]] ModelParams resolve() const {
    ModelParams p{};
    if (!preset.empty()) p = preset_table().at(preset);
    if (omega) p.omega = *omega;
    if (alpha) p.alpha = *alpha;
    if (beta) p.beta = *beta;
    if (gamma) p.gamma = *gamma;
    p.kind = parse_model_kind(model);
    if (p.kind == ModelKind::GARCH && !gamma) p.gamma = 0.0;
    if (!p.in_support()) throw DomainError("parameters outside support");
    return p;
  }
};

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NonConvergenceError*>(&e) ||
      dynamic_cast<const DegenerateCovarianceError*>(&e) ||
      dynamic_cast<const DegenerateSeriesError*>(&e)) {
    return kNumericalFailure;
  }
  return kDataError;
}

const char* error_class(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse error";
  if (dynamic_cast<const InsufficientDataError*>(&e)) return "insufficient data";
  if (dynamic_cast<const DomainError*>(&e)) return "domain error";
  if (dynamic_cast<const NonConvergenceError*>(&e)) return "non-convergence";
  if (dynamic_cast<const DegenerateCovarianceError*>(&e)) return "degenerate covariance";
  if (dynamic_cast<const DegenerateSeriesError*>(&e)) return "degenerate series";
  return "error";
}

}  // namespace

SummaryReport run(const RunManifest& m, std::ostream& log) {
  const auto returns = load_input(m);
  const auto grid = linear_grid(m.nic.min, m.nic.max, m.nic.points);

  std::error_code ec;
  fs::create_directories(m.out_dir, ec);
  if (ec) throw Error("cannot create output directory " + m.out_dir.string() + ": " + ec.message());

  WindowCallback on_window;
  if (!m.quiet) {
    on_window = [&log](std::size_t w, double fraction) {
      log << "window " << w << " acceptance " << io::format_double(fraction) << '\n';
    };
  }
  const auto result = run_adaptive(m.chain, returns, on_window);
  const auto report = summarize(result, returns, m.jackknife_blocks);

  Eigen::VectorXd means(static_cast<Eigen::Index>(report.parameters.size()));
  for (std::size_t k = 0; k < report.parameters.size(); ++k) {
    means(static_cast<Eigen::Index>(k)) = report.parameters[k].mean;
  }
  const auto posterior_mean = ModelParams::from_vector(means, result.kind);
  const std::size_t max_lag = std::min(m.acf_max_lag, result.samples.size() - 1);

  emit(m.out_dir / "samples.csv", [&](std::ostream& o) { io::write_samples_csv(o, result); });
  emit(m.out_dir / "acceptance.csv", [&](std::ostream& o) { io::write_acceptance_csv(o, result); });
  emit(m.out_dir / "acf.csv", [&](std::ostream& o) { io::write_acf_csv(o, result, max_lag); });
  emit(m.out_dir / "nic.csv", [&](std::ostream& o) {
    io::write_nic_csv(o, news_impact_curve(posterior_mean, grid));
  });
  io::write_file_atomic(m.out_dir / "moments.json", io::moments_json(result));
  io::write_file_atomic(m.out_dir / "summary.json", io::summary_json(report));
  io::write_file_atomic(m.out_dir / "summary.txt", io::summary_text(report));
  return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Bayesian GARCH/QGARCH estimation with an adaptive Student's t MH sampler",
               "agarch"};
  cli.require_subcommand(1);

  RunManifest manifest;
  std::string input_kind = "prices";
  std::string model = "qgarch";
  std::string column = "0";
  std::optional<std::size_t> freeze_after;
  std::optional<double> run_sigma1;
  auto* run_cmd = cli.add_subcommand("run", "Sample the posterior and write reports");
  run_cmd->add_option("--input", manifest.input, "Price or returns CSV")->required();
  run_cmd->add_option("--input-kind", input_kind)->check(CLI::IsMember({"prices", "returns"}));
  run_cmd->add_option("--column", column, "Price column index or header name");
  run_cmd->add_option("--model", model)->check(CLI::IsMember({"garch", "qgarch"}));
  run_cmd->add_option("--nu", manifest.chain.nu, "Student's t degrees of freedom");
  run_cmd->add_option("--burn-in", manifest.chain.burn_in);
  run_cmd->add_option("--initial-pool", manifest.chain.initial_pool);
  run_cmd->add_option("--update-interval", manifest.chain.update_interval);
  run_cmd->add_option("--samples", manifest.chain.total_samples);
  run_cmd->add_option("--seed", manifest.chain.seed);
  run_cmd->add_option("--freeze-after", freeze_after,
                      "Stop re-fitting the proposal after this many samples");
  run_cmd->add_option("--sigma1-sq", run_sigma1, "Initial conditional variance");
  run_cmd->add_option("--out-dir", manifest.out_dir);
  run_cmd->add_option("--nic-min", manifest.nic.min);
  run_cmd->add_option("--nic-max", manifest.nic.max);
  run_cmd->add_option("--nic-points", manifest.nic.points);
  run_cmd->add_option("--acf-max-lag", manifest.acf_max_lag);
  run_cmd->add_option("--jackknife-blocks", manifest.jackknife_blocks);
  run_cmd->add_flag("--quiet", manifest.quiet, "Suppress per-window log lines");

  ParamOptions sim_params;
  std::size_t sim_n = 0;
  std::optional<double> sim_sigma1;
  std::uint64_t sim_seed = 0;
  fs::path sim_out;
  auto* sim_cmd = cli.add_subcommand("simulate", "Write a synthetic QGARCH returns CSV");
  sim_params.add_to(*sim_cmd);
  sim_cmd->add_option("--n", sim_n, "Number of returns")->required();
  sim_cmd->add_option("--sigma1-sq", sim_sigma1,
                      "Initial variance (default: unconditional variance)");
  sim_cmd->add_option("--seed", sim_seed);
  sim_cmd->add_option("--out", sim_out)->required();

  ParamOptions nic_params;
  NicGrid nic_grid;
  fs::path nic_out;
  auto* nic_cmd = cli.add_subcommand("nic", "Write the news impact curve for fixed parameters");
  nic_params.add_to(*nic_cmd);
  nic_cmd->add_option("--nic-min", nic_grid.min);
  nic_cmd->add_option("--nic-max", nic_grid.max);
  nic_cmd->add_option("--nic-points", nic_grid.points);
  nic_cmd->add_option("--out", nic_out)->required();

  std::vector<const char*> argv{"agarch"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    cli.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << cli.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*run_cmd) {
      manifest.input_kind = input_kind == "returns" ? InputKind::Returns : InputKind::Prices;
      manifest.column = parse_column(column);
      manifest.chain.kind = parse_model_kind(model);
      manifest.chain.freeze_after = freeze_after;
      manifest.chain.sigma1_sq = run_sigma1;
      const auto report = run(manifest, out);
      if (!manifest.quiet) out << io::summary_text(report);
    } else if (*sim_cmd) {
      const auto params = sim_params.resolve();
      const double s1 = sim_sigma1 ? *sim_sigma1 : unconditional_variance(params);
      const auto series = simulate_qgarch(params, sim_n, s1, sim_seed);
      std::ostringstream buf;
      write_returns_csv(buf, series);
      io::write_file_atomic(sim_out, buf.str());
    } else if (*nic_cmd) {
      const auto params = nic_params.resolve();
      const auto grid = linear_grid(nic_grid.min, nic_grid.max, nic_grid.points);
      std::ostringstream buf;
      io::write_nic_csv(buf, news_impact_curve(params, grid));
      io::write_file_atomic(nic_out, buf.str());
    }
  } catch (const Error& e) {
    err << error_class(e) << ": " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kOk;
}

}  // namespace agarch::app
