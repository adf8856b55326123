#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sparc/complex_set.hpp"
#include "sparc/network.hpp"

namespace sparc {

/// Per-complex derivability scores against one network.
struct DerivabilityRecord {
  std::string complex_id;
  std::size_t present_count = 0;     // |B ∩ V|
  std::size_t nonisolated_count = 0; // |B'|
  std::vector<std::size_t> component_sizes;  // components of B ∩ V, non-increasing
  double cs = 0.0;
  double es = 0.0;
  double ce = 0.0;
  std::optional<double> density;  // undefined when |B ∩ V| < 2
  bool k_protein = false;
  bool k_network = false;

  friend bool operator==(const DerivabilityRecord&, const DerivabilityRecord&) = default;
};

struct IndexCounts {
  std::size_t protein = 0;  // |D_P|
  std::size_t network = 0;  // |D_N|
  std::size_t ce = 0;       // |D_CE|

  friend bool operator==(const IndexCounts&, const IndexCounts&) = default;
};

struct DerivabilityReport {
  std::string network_label;
  std::size_t k = 1;
  double t_ce = 0.0;
  std::vector<DerivabilityRecord> records;
  IndexCounts index_counts;

  friend bool operator==(const DerivabilityReport&, const DerivabilityReport&) = default;
};

/// ce >= t, within kScoreTolerance.
inline bool meets_threshold(double score, double threshold) {
  return score >= threshold - kScoreTolerance;
}

/// Fraction of the non-isolated present members lying in their largest
/// component. Components are taken in the subgraph induced by those members.
double component_score(const Network& g, const ProteinSet& members);

/// Intra-complex edge weight over the edge weight of the subgraph induced by
/// the present members and all of their direct neighbors.
double edge_score(const Network& g, const ProteinSet& members);

double ce_score(const Network& g, const ProteinSet& members);

/// Intra-complex weight / (n (n-1)), n = |B ∩ V|, each edge counted once.
/// Throws ArgumentError when n < 2.
double edge_density(const Network& g, const ProteinSet& members);

inline double component_score(const Network& g, const Complex& b) { return component_score(g, b.members); }
inline double edge_score(const Network& g, const Complex& b) { return edge_score(g, b.members); }
inline double ce_score(const Network& g, const Complex& b) { return ce_score(g, b.members); }
inline double edge_density(const Network& g, const Complex& b) { return edge_density(g, b.members); }

DerivabilityRecord derivability_record(const Network& g, const Complex& b, std::size_t k);

/// One record per complex in catalog order; requires k >= 1, t_ce in [0,1].
DerivabilityReport derivability_report(const Network& g, const ComplexSet& catalog, std::size_t k,
                                       double t_ce, std::string network_label = "");

/// Recomputes index_counts from the records and the report's k and t_ce.
IndexCounts count_indices(const std::vector<DerivabilityRecord>& records, double t_ce);

/// For each threshold t: number of k-protein-derivable complexes with CE >= t.
std::vector<std::pair<double, std::size_t>> ce_profile(const Network& g, const ComplexSet& catalog,
                                                       std::size_t k, const std::vector<double>& thresholds);

struct SparsePartition {
  ComplexSet sparse;
  ComplexSet dense;
};

/// Splits the k-protein-derivable complexes of `catalog` at report.t_ce.
/// Records are matched to complexes by id.
SparsePartition partition_sparse(const DerivabilityReport& report, const ComplexSet& catalog);

}  // namespace sparc
