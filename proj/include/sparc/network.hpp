#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sparc/common.hpp"

namespace sparc {

using NodeId = std::uint32_t;

struct Neighbor {
  NodeId node;
  double weight;
};

struct Edge {
  std::string a;
  std::string b;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// How to combine weights when the same unordered pair is seen twice.
enum class WeightMerge { Max, Mean };

/// Weighted undirected graph over protein identifiers.
///
/// Immutable once built. Node ids are dense and follow the lexicographic
/// order of the protein names, so iterating ids is iterating names in order.
/// Adjacency lists are sorted by neighbor id.
class Network {
 public:
  Network() = default;

  std::size_t node_count() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return names_.empty(); }

  std::optional<NodeId> find(std::string_view protein) const;
  bool contains(std::string_view protein) const { return find(protein).has_value(); }
  const std::string& name(NodeId id) const { return names_[id]; }
  const std::vector<std::string>& names() const { return names_; }

  std::span<const Neighbor> neighbors(NodeId id) const { return adjacency_[id]; }
  std::size_t degree(NodeId id) const { return adjacency_[id].size(); }

  /// Weight of edge {u,v}, or 0 if absent.
  double weight(NodeId u, NodeId v) const;

  /// Canonical edge list: a < b, sorted by (a, b).
  std::vector<Edge> edges() const;

  ProteinSet node_set() const { return {names_.begin(), names_.end()}; }

  friend bool operator==(const Network&, const Network&);

 private:
  friend class NetworkBuilder;

  std::vector<std::string> names_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Accumulates nodes and edges, then freezes them into a Network.
///
/// Self-loops are dropped and counted. Duplicate unordered pairs collapse
/// according to the merge policy. Weights must lie in (0, 1].
class NetworkBuilder {
 public:
  explicit NetworkBuilder(WeightMerge policy = WeightMerge::Max) : policy_(policy) {}

  void add_node(std::string_view protein);
  /// Returns false if the edge was a self-loop (the node is still added).
  bool add_edge(std::string_view a, std::string_view b, double weight);

  std::size_t self_loops() const { return self_loops_; }
  std::size_t duplicates() const { return duplicates_; }

  Network build() const;

 private:
  struct Accum {
    double max = 0.0;
    double sum = 0.0;
    std::size_t count = 0;
  };

  WeightMerge policy_;
  ProteinSet nodes_;
  std::map<std::pair<std::string, std::string>, Accum> edges_;
  std::size_t self_loops_ = 0;
  std::size_t duplicates_ = 0;
};

struct LoadStats {
  std::size_t lines = 0;
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
};

struct NetworkStats {
  std::size_t protein_count = 0;
  std::size_t interaction_count = 0;
  double avg_node_degree = 0.0;
};

/// Reads the tab/whitespace separated edge-list format:
/// `proteinA proteinB [weight]`, `#` comments. A `#@node<TAB>X` directive
/// declares an isolated node (plain comment to other readers).
Network read_network(std::istream& in, double default_weight = 1.0,
                     WeightMerge policy = WeightMerge::Max, LoadStats* stats = nullptr);
Network load_network(const std::filesystem::path& path, double default_weight = 1.0,
                     WeightMerge policy = WeightMerge::Max, LoadStats* stats = nullptr);

void write_network(const Network& g, std::ostream& out);
void save_network(const Network& g, const std::filesystem::path& path);

Network merge_networks(const Network& p, const Network& f, WeightMerge policy = WeightMerge::Max);

/// Uniform random graph on `nodes` with floor(|nodes| * avg_degree / 2)
/// distinct edges of weight 1.
Network random_network(const ProteinSet& nodes, double target_avg_degree, std::uint64_t seed);

/// Edge count random_network() produces for the given size and degree.
std::size_t random_edge_target(std::size_t node_count, double target_avg_degree);

/// Components of the subgraph induced by `within`, largest first, ties by
/// smallest member. Members of `within` absent from g are singletons.
std::vector<ProteinSet> connected_components(const Network& g, const ProteinSet& within);

/// (s ∩ V) together with every direct neighbor of those members.
ProteinSet neighborhood(const Network& g, const ProteinSet& s);

NetworkStats stats(const Network& g);

/// Ids of the members of `s` present in g, ascending.
std::vector<NodeId> resolve(const Network& g, const ProteinSet& s);

/// Component sizes of the subgraph induced by `ids` (sorted ascending ids),
/// non-increasing.
std::vector<std::size_t> component_sizes(const Network& g, std::span<const NodeId> ids);

}  // namespace sparc
