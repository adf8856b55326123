#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sparc/common.hpp"

namespace sparc {

/// A named protein set: a benchmark complex or a predicted cluster.
struct Complex {
  std::string id;
  ProteinSet members;

  friend bool operator==(const Complex&, const Complex&) = default;
};

/// Ordered catalog of complexes with pairwise distinct ids and non-empty
/// member sets.
class ComplexSet {
 public:
  ComplexSet() = default;
  explicit ComplexSet(std::vector<Complex> complexes);

  void add(Complex c);

  std::size_t size() const { return complexes_.size(); }
  bool empty() const { return complexes_.empty(); }
  const Complex& operator[](std::size_t i) const { return complexes_[i]; }
  auto begin() const { return complexes_.begin(); }
  auto end() const { return complexes_.end(); }
  const std::vector<Complex>& complexes() const { return complexes_; }

  /// Index of the complex with this id, or size() if absent.
  std::size_t index_of(std::string_view id) const;

  friend bool operator==(const ComplexSet&, const ComplexSet&) = default;

 private:
  std::vector<Complex> complexes_;
};

/// Catalog format: `complex_id<TAB>p1 p2 ...`, `#` comments.
ComplexSet read_catalog(std::istream& in);
ComplexSet load_catalog(const std::filesystem::path& path);
void write_catalog(const ComplexSet& set, std::ostream& out);
void save_catalog(const ComplexSet& set, const std::filesystem::path& path);

}  // namespace sparc
