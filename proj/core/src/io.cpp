#include "agarch/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "agarch/errors.hpp"

namespace agarch::io {
namespace {

using nlohmann::json;

json to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json parameter_names_json(ModelKind kind) {
  json names = json::array();
  for (auto n : parameter_names(kind)) names.push_back(std::string(n));
  return names;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw Error("failed to format number");
  return std::string(buf, ptr);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

void write_samples_csv(std::ostream& out, const ChainResult& result) {
  out << "omega,alpha,beta,gamma\n";
  for (const auto& s : result.samples) {
    out << format_double(s(0)) << ',' << format_double(s(1)) << ',' << format_double(s(2))
        << ',' << format_double(s.size() > 3 ? s(3) : 0.0) << '\n';
  }
}

void write_acceptance_csv(std::ostream& out, const ChainResult& result) {
  out << "window,mc_time,acceptance\n";
  for (std::size_t w = 0; w < result.acceptance_trace.size(); ++w) {
    out << w << ',' << (w + 1) * result.update_interval << ','
        << format_double(result.acceptance_trace[w]) << '\n';
  }
}

void write_acf_csv(std::ostream& out, const ChainResult& result, std::size_t max_lag) {
  const auto names = parameter_names(result.kind);
  std::vector<std::vector<double>> columns;
  for (std::size_t k = 0; k < names.size(); ++k) {
    columns.push_back(acf(result.column(k), max_lag));
  }
  out << "lag";
  for (auto n : names) out << ',' << n;
  out << '\n';
  for (std::size_t t = 0; t <= max_lag; ++t) {
    out << t;
    for (const auto& c : columns) out << ',' << format_double(c[t]);
    out << '\n';
  }
}

void write_nic_csv(std::ostream& out, const std::vector<NewsImpactPoint>& curve) {
  out << "y,sigma_sq\n";
  for (const auto& p : curve) out << format_double(p.y) << ',' << format_double(p.sigma_sq) << '\n';
}

std::string moments_json(const ChainResult& result) {
  json snapshots = json::array();
  const double scale = (result.nu - 2.0) / result.nu;
  for (const auto& s : result.moment_trace) {
    snapshots.push_back({{"mc_time", s.mc_time},
                         {"mean", to_json(s.mean)},
                         {"second_central", to_json(s.second_central)},
                         {"sigma", to_json(Eigen::MatrixXd(scale * s.second_central))}});
  }
  json doc = {{"parameters", parameter_names_json(result.kind)},
              {"nu", result.nu},
              {"update_interval", result.update_interval},
              {"snapshots", std::move(snapshots)}};
  return doc.dump(2) + "\n";
}

std::string proposal_json(const ProposalDensity& proposal) {
  json doc = {{"mean", to_json(proposal.mean())},
              {"sigma", to_json(proposal.sigma())},
              {"nu", proposal.nu()},
              {"jitter", proposal.jitter()}};
  return doc.dump(2) + "\n";
}

std::string summary_json(const SummaryReport& report) {
  json params = json::array();
  for (const auto& p : report.parameters) {
    params.push_back({{"name", p.name},
                      {"mean", p.mean},
                      {"sd", p.sd},
                      {"jackknife_se", p.jackknife_se},
                      {"two_tau_int", optional_number(p.two_tau_int)},
                      {"two_tau_int_error", optional_number(p.two_tau_int_error)},
                      {"se_consistency", optional_number(p.se_consistency)}});
  }
  json doc = {{"n_samples", report.n_samples},
              {"n_observations", report.n_observations},
              {"jackknife_blocks", report.jackknife_blocks},
              {"acceptance_plateau", optional_number(report.acceptance_plateau)},
              {"se_consistent", report.se_consistent()},
              {"parameters", std::move(params)}};
  return doc.dump(2) + "\n";
}

std::string summary_text(const SummaryReport& report) {
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("-"); };

  std::vector<std::vector<std::string>> rows;
  rows.push_back({""});
  rows.push_back({"mean"});
  rows.push_back({"SD"});
  rows.push_back({"SE"});
  rows.push_back({"2tau_int"});
  for (const auto& p : report.parameters) {
    rows[0].push_back(p.name);
    rows[1].push_back(format_double(p.mean));
    rows[2].push_back(format_double(p.sd));
    rows[3].push_back(format_double(p.jackknife_se));
    rows[4].push_back(p.two_tau_int ? opt(p.two_tau_int) + " +- " + opt(p.two_tau_int_error)
                                    : std::string("-"));
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }

  std::ostringstream out;
  out << "samples: " << report.n_samples << "  observations: " << report.n_observations
      << "  jackknife blocks: " << report.jackknife_blocks << '\n';
  out << "acceptance plateau: " << opt(report.acceptance_plateau) << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << r[c];
      if (c + 1 < r.size()) out << std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace agarch::io
