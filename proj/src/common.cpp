#include "sparc/common.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <system_error>

namespace sparc {

std::string format_real(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf.data(), ptr);
}

double parse_real(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("not a decimal real: '" + std::string(text) + "'");
  }
  return value;
}

std::string join(const ProteinSet& members, std::string_view sep) {
  std::string out;
  for (const auto& m : members) {
    if (!out.empty()) out += sep;
    out += m;
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, value >>= 4) out[i] = digits[value & 0xF];
  return out;
}

}  // namespace sparc
