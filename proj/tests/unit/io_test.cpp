#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "agarch/diagnostics.hpp"
#include "agarch/errors.hpp"
#include "agarch/io.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

using namespace agarch;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  return out;
}

ChainResult pseudo_chain() {
  ChainResult r;
  const auto a = testing::iid_normal(2000, 1);
  const auto b = testing::ar1_series(0.4, 2000, 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.samples.push_back(Eigen::Vector4d(0.05 + 0.01 * a[i], 0.08 + 0.01 * b[i], 0.9, -0.1 + a[i] * 1e-3));
  }
  r.samples[7](2) = 0.91;  // keep beta non-constant
  r.acceptance_trace = {0.3, 0.7};
  r.update_interval = 1000;
  r.nu = 10.0;
  r.moment_trace.push_back({0, Eigen::Vector4d::Zero(), Eigen::Matrix4d::Identity()});
  return r;
}

}  // namespace

TEST_CASE("format_double round-trips every finite double") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 20000; ++i) {
    std::uint64_t bits = rng();
    double v = 0.0;
    std::memcpy(&v, &bits, sizeof v);
    if (!std::isfinite(v)) continue;
    const auto text = io::format_double(v);
    CHECK(std::strtod(text.c_str(), nullptr) == v);
  }
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(std::strtod(io::format_double(std::numeric_limits<double>::denorm_min()).c_str(), nullptr) ==
        std::numeric_limits<double>::denorm_min());
}

TEST_CASE("write_file_atomic replaces the target") {
  testing::TempDir dir;
  const auto p = dir / "x.txt";
  io::write_file_atomic(p, "first");
  io::write_file_atomic(p, "second");
  CHECK(testing::slurp(p) == "second");
  CHECK_FALSE(std::filesystem::exists(dir / "x.txt.tmp"));
  CHECK_THROWS_AS(io::write_file_atomic(dir / "missing" / "y.txt", "z"), Error);
}

TEST_CASE("samples.csv preserves every draw exactly") {
  const auto r = pseudo_chain();
  std::stringstream buf;
  io::write_samples_csv(buf, r);
  std::string line;
  std::getline(buf, line);
  CHECK(line == "omega,alpha,beta,gamma");
  std::size_t row = 0;
  while (std::getline(buf, line)) {
    const auto f = split(line, ',');
    REQUIRE(f.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(std::stod(f[static_cast<std::size_t>(k)]) == r.samples[row](k));
    ++row;
  }
  CHECK(row == r.samples.size());
}

TEST_CASE("summary text and JSON carry identical values") {
  const auto r = pseudo_chain();
  const auto rep = summarize(r, ReturnSeries{{0.0, 1.0}}, 20);
  const auto doc = nlohmann::json::parse(io::summary_json(rep));
  CHECK(doc["n_samples"] == 2000);
  CHECK(doc["acceptance_plateau"].get<double>() == doctest::Approx(0.5));

  const auto text = io::summary_text(rep);
  std::stringstream ss(text);
  std::string line;
  std::vector<std::vector<std::string>> table;
  while (std::getline(ss, line)) {
    std::stringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    table.push_back(tokens);
  }
  // Lines: 2 header lines, then name row, mean, SD, SE, 2tau_int.
  REQUIRE(table.size() == 7);
  const auto& params = doc["parameters"];
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(table[2][k] == params[k]["name"].get<std::string>());
    CHECK(std::stod(table[3][k + 1]) == params[k]["mean"].get<double>());
    CHECK(std::stod(table[4][k + 1]) == params[k]["sd"].get<double>());
    CHECK(std::stod(table[5][k + 1]) == params[k]["jackknife_se"].get<double>());
    CHECK(std::stod(table[6][1 + 3 * k]) == params[k]["two_tau_int"].get<double>());
    CHECK(std::stod(table[6][3 + 3 * k]) == params[k]["two_tau_int_error"].get<double>());
  }
}

TEST_CASE("moment and proposal JSON") {
  const auto r = pseudo_chain();
  const auto doc = nlohmann::json::parse(io::moments_json(r));
  CHECK(doc["nu"] == 10.0);
  REQUIRE(doc["snapshots"].size() == 1);
  CHECK(doc["snapshots"][0]["sigma"][0][0].get<double>() == doctest::Approx(0.8));
  CHECK(doc["parameters"][3] == "gamma");

  const ProposalDensity g(Eigen::Vector2d(1.0, 2.0), Eigen::Matrix2d::Identity(), 10.0);
  const auto pj = nlohmann::json::parse(io::proposal_json(g));
  CHECK(pj["mean"][1] == 2.0);
  CHECK(pj["sigma"][1][1] == 1.0);
  CHECK(pj["nu"] == 10.0);
}

TEST_CASE("acf.csv and acceptance.csv layout") {
  const auto r = pseudo_chain();
  std::stringstream acf_buf;
  io::write_acf_csv(acf_buf, r, 10);
  std::string line;
  std::getline(acf_buf, line);
  CHECK(line == "lag,omega,alpha,beta,gamma");
  std::getline(acf_buf, line);
  CHECK(line == "0,1,1,1,1");

  std::stringstream acc;
  io::write_acceptance_csv(acc, r);
  CHECK(acc.str() == "window,mc_time,acceptance\n0,1000,0.3\n1,2000,0.7\n");
}
