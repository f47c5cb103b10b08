#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "agarch/model.hpp"

namespace agarch {

struct PriceSeries {
  /// Empty unless the file carried a label column ahead of the price column.
  std::vector<std::string> timestamps;
  std::vector<double> prices;

  [[nodiscard]] std::size_t size() const noexcept { return prices.size(); }
};

/// Percent log returns. Series produced by to_returns have zero sample mean.
struct ReturnSeries {
  std::vector<double> values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
};

/// Zero-based column index or header name.
using ColumnSelector = std::variant<std::size_t, std::string>;

/// Reads comma-delimited text. A first row whose selected field is not
/// numeric is taken as a header; naming a column requires one. Blank lines
/// are skipped. Rows in errors are reported by 1-based line number.
PriceSeries load_prices(std::istream& source, const ColumnSelector& column = std::size_t{0});

/// values[i] = 100 * (ln(p[i+1]/p[i]) - mean log ratio).
ReturnSeries to_returns(const PriceSeries& prices);

/// One-column returns file, as written by write_returns_csv. Values are taken
/// as-is (no demeaning).
ReturnSeries load_returns(std::istream& source);
void write_returns_csv(std::ostream& out, const ReturnSeries& returns);

/// Draws y_t = sigma_t * eps_t with eps_t ~ N(0,1) and sigma_t^2 from the
/// QGARCH recursion started at sigma1_sq.
ReturnSeries simulate_qgarch(const ModelParams& params, std::size_t n, double sigma1_sq,
                             std::uint64_t seed);

}  // namespace agarch
