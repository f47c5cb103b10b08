#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "agarch/data.hpp"
#include "agarch/diagnostics.hpp"
#include "agarch/sampler.hpp"

namespace agarch::app {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDataError = 3,
  kNumericalFailure = 4,
};

enum class InputKind { Prices, Returns };

struct NicGrid {
  double min = -5.0;
  double max = 5.0;
  std::size_t points = 201;
};

struct RunManifest {
  std::filesystem::path input;
  InputKind input_kind = InputKind::Prices;
  ColumnSelector column = std::size_t{0};
  ChainConfig chain;
  std::filesystem::path out_dir = ".";
  NicGrid nic;
  std::size_t acf_max_lag = 200;
  std::size_t jackknife_blocks = 50;
  bool quiet = false;
};

/// Loads the input, runs the adaptive sampler and writes samples.csv,
/// summary.json, summary.txt, acf.csv, acceptance.csv, moments.json and
/// nic.csv into out_dir. Throws agarch::Error subclasses on failure.
SummaryReport run(const RunManifest& manifest, std::ostream& log);

/// Command-line entry point. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agarch::app
