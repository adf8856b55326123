#include "sparc/complex_set.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace sparc {

ComplexSet::ComplexSet(std::vector<Complex> complexes) {
  complexes_.reserve(complexes.size());
  for (auto& c : complexes) add(std::move(c));
}

void ComplexSet::add(Complex c) {
  if (c.id.empty()) throw ArgumentError("complex id must be non-empty");
  if (c.members.empty()) throw ArgumentError("complex '" + c.id + "' has no members");
  if (index_of(c.id) != complexes_.size()) throw ArgumentError("duplicate complex id '" + c.id + "'");
  complexes_.push_back(std::move(c));
}

std::size_t ComplexSet::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < complexes_.size(); ++i) {
    if (complexes_[i].id == id) return i;
  }
  return complexes_.size();
}

ComplexSet read_catalog(std::istream& in) {
  std::vector<Complex> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected '<id><TAB><members>'");
    }
    Complex c{line.substr(0, tab), {}};
    std::size_t i = tab + 1;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) c.members.insert(line.substr(i, j - i));
      i = j;
    }
    if (c.id.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty complex id");
    if (c.members.empty()) throw ParseError("line " + std::to_string(lineno) + ": complex '" + c.id + "' has no members");
    if (!seen.insert(c.id).second) {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate complex id '" + c.id + "'");
    }
    out.push_back(std::move(c));
  }
  return ComplexSet(std::move(out));
}

ComplexSet load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file " + path.string());
  try {
    return read_catalog(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_catalog(const ComplexSet& set, std::ostream& out) {
  for (const auto& c : set) out << c.id << '\t' << join(c.members) << '\n';
}

void save_catalog(const ComplexSet& set, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_catalog(set, out);
}

}  // namespace sparc
