#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sparc {

using ProteinSet = std::set<std::string, std::less<>>;

/// Tolerance used when comparing scores against thresholds.
inline constexpr double kScoreTolerance = 1e-9;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a recorded result no longer agrees with its inputs.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal text that parses back to exactly `value`.
std::string format_real(double value);

/// Strict decimal parse; throws ParseError on trailing garbage.
double parse_real(std::string_view text);

std::string join(const ProteinSet& members, std::string_view sep = " ");

/// FNV-1a, 64-bit. Used for config hashes recorded in report headers.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

}  // namespace sparc
