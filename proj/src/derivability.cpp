#include "sparc/derivability.hpp"

#include <algorithm>

namespace sparc {

namespace {

bool contains_id(std::span<const NodeId> sorted, NodeId id) {
  return std::binary_search(sorted.begin(), sorted.end(), id);
}

// Sum of weights of edges with both endpoints in `ids` (sorted), each once.
double internal_weight(const Network& g, std::span<const NodeId> ids) {
  double total = 0.0;
  for (const auto u : ids) {
    for (const auto& nb : g.neighbors(u)) {
      if (nb.node > u && contains_id(ids, nb.node)) total += nb.weight;
    }
  }
  return total;
}

// Present members with at least one edge to another present member.
std::vector<NodeId> nonisolated(const Network& g, std::span<const NodeId> present) {
  std::vector<NodeId> out;
  for (const auto u : present) {
    const auto adj = g.neighbors(u);
    if (std::any_of(adj.begin(), adj.end(), [&](const Neighbor& nb) { return contains_id(present, nb.node); })) {
      out.push_back(u);
    }
  }
  return out;
}

double component_score_ids(const Network& g, std::span<const NodeId> present) {
  const auto prime = nonisolated(g, present);
  if (prime.empty()) return 0.0;
  const auto sizes = component_sizes(g, prime);
  return static_cast<double>(sizes.front()) / static_cast<double>(prime.size());
}

double edge_score_ids(const Network& g, std::span<const NodeId> present) {
  std::vector<NodeId> hood(present.begin(), present.end());
  for (const auto u : present) {
    for (const auto& nb : g.neighbors(u)) hood.push_back(nb.node);
  }
  std::sort(hood.begin(), hood.end());
  hood.erase(std::unique(hood.begin(), hood.end()), hood.end());
  const double denominator = internal_weight(g, hood);
  if (denominator <= 0.0) return 0.0;
  return internal_weight(g, present) / denominator;
}

}  // namespace

double component_score(const Network& g, const ProteinSet& members) {
  return component_score_ids(g, resolve(g, members));
}

double edge_score(const Network& g, const ProteinSet& members) {
  return edge_score_ids(g, resolve(g, members));
}

double ce_score(const Network& g, const ProteinSet& members) {
  const auto present = resolve(g, members);
  return component_score_ids(g, present) * edge_score_ids(g, present);
}

double edge_density(const Network& g, const ProteinSet& members) {
  const auto present = resolve(g, members);
  if (present.size() < 2) {
    throw ArgumentError("edge density undefined for fewer than 2 present members");
  }
  const double n = static_cast<double>(present.size());
  return internal_weight(g, present) / (n * (n - 1.0));
}

DerivabilityRecord derivability_record(const Network& g, const Complex& b, std::size_t k) {
  const auto present = resolve(g, b.members);
  DerivabilityRecord r;
  r.complex_id = b.id;
  r.present_count = present.size();
  r.nonisolated_count = nonisolated(g, present).size();
  r.component_sizes = component_sizes(g, present);
  r.cs = component_score_ids(g, present);
  r.es = edge_score_ids(g, present);
  r.ce = r.cs * r.es;
  if (present.size() >= 2) {
    const double n = static_cast<double>(present.size());
    r.density = internal_weight(g, present) / (n * (n - 1.0));
  }
  r.k_protein = r.present_count >= k;
  r.k_network = r.k_protein && r.component_sizes.size() == 1;
  return r;
}

IndexCounts count_indices(const std::vector<DerivabilityRecord>& records, double t_ce) {
  IndexCounts c;
  for (const auto& r : records) {
    if (!r.k_protein) continue;
    ++c.protein;
    if (r.k_network) ++c.network;
    if (meets_threshold(r.ce, t_ce)) ++c.ce;
  }
  return c;
}

DerivabilityReport derivability_report(const Network& g, const ComplexSet& catalog, std::size_t k,
                                       double t_ce, std::string network_label) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  if (!(t_ce >= 0.0 && t_ce <= 1.0)) throw ArgumentError("t_ce must lie in [0,1]");
  DerivabilityReport report;
  report.network_label = std::move(network_label);
  report.k = k;
  report.t_ce = t_ce;
  report.records.reserve(catalog.size());
  for (const auto& b : catalog) report.records.push_back(derivability_record(g, b, k));
  report.index_counts = count_indices(report.records, t_ce);
  return report;
}

std::vector<std::pair<double, std::size_t>> ce_profile(const Network& g, const ComplexSet& catalog,
                                                       std::size_t k, const std::vector<double>& thresholds) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  for (double t : thresholds) {
    if (!(t >= 0.0 && t <= 1.0)) throw ArgumentError("CE thresholds must lie in [0,1]");
  }
  std::vector<double> scores;
  for (const auto& b : catalog) {
    const auto present = resolve(g, b.members);
    if (present.size() < k) continue;
    scores.push_back(component_score_ids(g, present) * edge_score_ids(g, present));
  }
  std::vector<std::pair<double, std::size_t>> out;
  out.reserve(thresholds.size());
  for (double t : thresholds) {
    const auto n = std::count_if(scores.begin(), scores.end(), [t](double s) { return meets_threshold(s, t); });
    out.emplace_back(t, static_cast<std::size_t>(n));
  }
  return out;
}

SparsePartition partition_sparse(const DerivabilityReport& report, const ComplexSet& catalog) {
  SparsePartition out;
  for (const auto& r : report.records) {
    if (!r.k_protein) continue;
    const auto idx = catalog.index_of(r.complex_id);
    if (idx == catalog.size()) {
      throw IntegrityError("report record '" + r.complex_id + "' has no complex in the catalog");
    }
    if (meets_threshold(r.ce, report.t_ce)) {
      out.dense.add(catalog[idx]);
    } else {
      out.sparse.add(catalog[idx]);
    }
  }
  return out;
}

}  // namespace sparc
