#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "agarch/diagnostics.hpp"
#include "agarch/model.hpp"
#include "agarch/proposal.hpp"
#include "agarch/sampler.hpp"

namespace agarch::io {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Replaces `path` with `contents` through a temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// One row per draw, header omega,alpha,beta,gamma (gamma is 0 for GARCH).
void write_samples_csv(std::ostream& out, const ChainResult& result);
/// window,acceptance
void write_acceptance_csv(std::ostream& out, const ChainResult& result);
/// lag followed by one column per parameter.
void write_acf_csv(std::ostream& out, const ChainResult& result, std::size_t max_lag);
/// y,sigma_sq
void write_nic_csv(std::ostream& out, const std::vector<NewsImpactPoint>& curve);

std::string moments_json(const ChainResult& result);
std::string proposal_json(const ProposalDensity& proposal);
std::string summary_json(const SummaryReport& report);
/// Aligned table: one column per parameter, rows mean / SD / SE / 2tau_int.
std::string summary_text(const SummaryReport& report);

}  // namespace agarch::io
