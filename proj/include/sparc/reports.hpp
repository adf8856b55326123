#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sparc/benchmatch.hpp"
#include "sparc/derivability.hpp"
#include "sparc/network.hpp"
#include "sparc/refine.hpp"

namespace sparc {

inline constexpr std::string_view kToolName = "sparc-toolkit";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Provenance block written at the top of every report.
struct ReportHeader {
  std::string kind;
  std::string config_hash;
  std::uint64_t seed = 0;

  friend bool operator==(const ReportHeader&, const ReportHeader&) = default;
};

using CeProfile = std::vector<std::pair<double, std::size_t>>;

// Derivability report: `# key: value` header lines, a `# summary:` JSON
// line, then one TSV row per complex.
void write_derivability(const DerivabilityReport& report, const ReportHeader& header, std::ostream& out);
DerivabilityReport read_derivability(std::istream& in, ReportHeader* header = nullptr);

/// One column of counts per labelled network.
void write_ce_profile(const std::vector<std::pair<std::string, CeProfile>>& columns, const ReportHeader& header,
                      std::ostream& out);

void write_sparc(const SparcResult& result, const SparcConfig& config, const ReportHeader& header,
                 std::ostream& out);
SparcResult read_sparc(std::istream& in, ReportHeader* header = nullptr);

void write_eval(const EvalReport& report, const ReportHeader& header, std::ostream& out);
EvalReport read_eval(std::istream& in, ReportHeader* header = nullptr);
void write_pair_matches(const EvalReport& report, std::ostream& out);

void write_stats(const std::vector<std::pair<std::string, NetworkStats>>& networks, const ReportHeader& header,
                 std::ostream& out);

/// Human-readable summary of any report this tool writes. Throws ParseError
/// (with a byte offset) on unrecognised or truncated input.
void inspect(std::istream& in, std::ostream& out);
void inspect(const std::filesystem::path& path, std::ostream& out);

}  // namespace sparc
