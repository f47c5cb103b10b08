#include "agarch/data.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <string_view>

#include "agarch/errors.hpp"
#include "agarch/io.hpp"
#include "agarch/rng.hpp"

namespace agarch {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_double(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

struct Row {
  std::size_t line;
  std::string text;
};

std::vector<Row> read_rows(std::istream& source) {
  std::vector<Row> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(source, line)) {
    ++number;
    if (trim(line).empty()) continue;
    rows.push_back({number, std::move(line)});
  }
  return rows;
}

}  // namespace

PriceSeries load_prices(std::istream& source, const ColumnSelector& column) {
  const auto rows = read_rows(source);
  if (rows.empty()) throw InsufficientDataError("price file has no rows");

  const auto first = split_fields(rows.front().text);
  std::size_t index = 0;
  bool has_header = false;
  if (const auto* name = std::get_if<std::string>(&column)) {
    has_header = true;
    bool found = false;
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (first[i] == *name) {
        index = i;
        found = true;
        break;
      }
    }
    if (!found) throw ParseError(rows.front().line, "no column named '" + *name + "'");
  } else {
    index = std::get<std::size_t>(column);
    has_header = index < first.size() && !parse_double(first[index]).has_value();
  }

  PriceSeries series;
  const bool labelled = index > 0;
  for (std::size_t r = has_header ? 1 : 0; r < rows.size(); ++r) {
    const auto fields = split_fields(rows[r].text);
    if (index >= fields.size()) {
      throw ParseError(rows[r].line, "missing column " + std::to_string(index));
    }
    const auto value = parse_double(fields[index]);
    if (!value) {
      throw ParseError(rows[r].line, "'" + std::string(fields[index]) + "' is not a number");
    }
    if (!(*value > 0.0) || !std::isfinite(*value)) {
      throw ParseError(rows[r].line, "price must be positive and finite");
    }
    series.prices.push_back(*value);
    if (labelled) series.timestamps.emplace_back(fields[0]);
  }
  if (series.size() < 2) {
    throw InsufficientDataError("need at least 2 prices, got " + std::to_string(series.size()));
  }
  return series;
}

ReturnSeries to_returns(const PriceSeries& prices) {
  if (prices.size() < 2) throw InsufficientDataError("need at least 2 prices");
  const std::size_t n = prices.size() - 1;
  std::vector<double> log_ratio(n);
  double s_bar = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    log_ratio[i] = std::log(prices.prices[i + 1] / prices.prices[i]);
    s_bar += log_ratio[i];
  }
  s_bar /= static_cast<double>(n);

  ReturnSeries out;
  out.values.resize(n);
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = 100.0 * (log_ratio[i] - s_bar);
    residual += out.values[i];
  }
  // Scaling by 100 can leave a rounding-level mean; remove it.
  residual /= static_cast<double>(n);
  for (double& v : out.values) v -= residual;
  return out;
}

ReturnSeries load_returns(std::istream& source) {
  const auto rows = read_rows(source);
  ReturnSeries out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto fields = split_fields(rows[r].text);
    const auto value = parse_double(fields[0]);
    if (!value) {
      if (r == 0) continue;  // header
      throw ParseError(rows[r].line, "'" + std::string(fields[0]) + "' is not a number");
    }
    if (!std::isfinite(*value)) throw ParseError(rows[r].line, "return must be finite");
    out.values.push_back(*value);
  }
  if (out.values.empty()) throw InsufficientDataError("returns file has no values");
  return out;
}

void write_returns_csv(std::ostream& out, const ReturnSeries& returns) {
  out << "return\n";
  for (double v : returns.values) out << io::format_double(v) << '\n';
}

ReturnSeries simulate_qgarch(const ModelParams& params, std::size_t n, double sigma1_sq,
                             std::uint64_t seed) {
  if (!params.in_support()) throw DomainError("simulation parameters outside support");
  if (n == 0) throw DomainError("simulation length must be at least 1");
  if (!(sigma1_sq > 0.0) || !std::isfinite(sigma1_sq)) {
    throw DomainError("initial variance must be positive and finite");
  }
  auto rng = make_stream(seed, streams::kSimulate);
  std::normal_distribution<double> normal;
  ReturnSeries out;
  out.values.resize(n);
  double s2 = sigma1_sq;
  for (std::size_t t = 0; t < n; ++t) {
    if (t > 0) {
      const double prev = out.values[t - 1];
      s2 = params.omega + params.gamma * prev + params.alpha * prev * prev + params.beta * s2;
    }
    out.values[t] = std::sqrt(s2) * normal(rng);
  }
  return out;
}

}  // namespace agarch
