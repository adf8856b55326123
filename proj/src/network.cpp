#include "sparc/network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_set>

namespace sparc {

std::optional<NodeId> Network::find(std::string_view protein) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), protein,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == names_.end() || *it != protein) return std::nullopt;
  return static_cast<NodeId>(it - names_.begin());
}

double Network::weight(NodeId u, NodeId v) const {
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& n, NodeId id) { return n.node < id; });
  return (it != adj.end() && it->node == v) ? it->weight : 0.0;
}

std::vector<Edge> Network::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < names_.size(); ++u) {
    for (const auto& n : adjacency_[u]) {
      if (n.node > u) out.push_back({names_[u], names_[n.node], n.weight});
    }
  }
  return out;
}

bool operator==(const Network& a, const Network& b) {
  if (a.names_ != b.names_ || a.edge_count_ != b.edge_count_) return false;
  for (std::size_t u = 0; u < a.adjacency_.size(); ++u) {
    const auto& x = a.adjacency_[u];
    const auto& y = b.adjacency_[u];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].node != y[i].node || x[i].weight != y[i].weight) return false;
    }
  }
  return true;
}

// --- builder ---------------------------------------------------------------

void NetworkBuilder::add_node(std::string_view protein) {
  if (protein.empty()) throw ArgumentError("empty protein identifier");
  nodes_.emplace(protein);
}

bool NetworkBuilder::add_edge(std::string_view a, std::string_view b, double weight) {
  if (!(weight > 0.0 && weight <= 1.0)) {
    throw ArgumentError("edge weight must lie in (0,1], got " + format_real(weight));
  }
  add_node(a);
  add_node(b);
  if (a == b) {
    ++self_loops_;
    return false;
  }
  auto key = a < b ? std::pair{std::string(a), std::string(b)}
                   : std::pair{std::string(b), std::string(a)};
  auto& acc = edges_[std::move(key)];
  if (acc.count > 0) ++duplicates_;
  acc.max = std::max(acc.max, weight);
  acc.sum += weight;
  ++acc.count;
  return true;
}

Network NetworkBuilder::build() const {
  Network g;
  g.names_.assign(nodes_.begin(), nodes_.end());
  g.adjacency_.resize(g.names_.size());
  for (const auto& [key, acc] : edges_) {
    const double w = policy_ == WeightMerge::Max ? acc.max : acc.sum / static_cast<double>(acc.count);
    const NodeId u = *g.find(key.first);
    const NodeId v = *g.find(key.second);
    g.adjacency_[u].push_back({v, w});
    g.adjacency_[v].push_back({u, w});
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end(), [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
  }
  g.edge_count_ = edges_.size();
  return g;
}

// --- edge-list io ----------------------------------------------------------

namespace {

constexpr std::string_view kNodeDirective = "#@node";

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Network read_network(std::istream& in, double default_weight, WeightMerge policy, LoadStats* stats) {
  if (!(default_weight > 0.0 && default_weight <= 1.0)) {
    throw ArgumentError("default weight must lie in (0,1]");
  }
  NetworkBuilder builder(policy);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    if (view.starts_with(kNodeDirective)) {
      auto fields = split_fields(view.substr(kNodeDirective.size()));
      for (auto f : fields) builder.add_node(f);
      continue;
    }
    if (view.starts_with('#')) continue;
    auto fields = split_fields(view);
    if (fields.empty()) continue;
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 2 or 3 columns, found " +
                       std::to_string(fields.size()));
    }
    double w = default_weight;
    if (fields.size() == 3) {
      try {
        w = parse_real(fields[2]);
      } catch (const ParseError&) {
        throw ParseError("line " + std::to_string(lineno) + ": non-numeric weight '" +
                         std::string(fields[2]) + "'");
      }
      if (!(w > 0.0 && w <= 1.0)) {
        throw ParseError("line " + std::to_string(lineno) + ": weight " + std::string(fields[2]) +
                         " outside (0,1]");
      }
    }
    builder.add_edge(fields[0], fields[1], w);
  }
  if (stats) {
    stats->lines = lineno;
    stats->self_loops = builder.self_loops();
    stats->duplicates = builder.duplicates();
  }
  return builder.build();
}

Network load_network(const std::filesystem::path& path, double default_weight, WeightMerge policy,
                     LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open network file " + path.string());
  try {
    return read_network(in, default_weight, policy, stats);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_network(const Network& g, std::ostream& out) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.degree(u) == 0) out << kNodeDirective << '\t' << g.name(u) << '\n';
  }
  for (const auto& e : g.edges()) {
    out << e.a << '\t' << e.b << '\t' << format_real(e.weight) << '\n';
  }
}

void save_network(const Network& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_network(g, out);
}

// --- operations ------------------------------------------------------------

Network merge_networks(const Network& p, const Network& f, WeightMerge policy) {
  NetworkBuilder builder(policy);
  for (const auto* g : {&p, &f}) {
    for (const auto& name : g->names()) builder.add_node(name);
    for (const auto& e : g->edges()) builder.add_edge(e.a, e.b, e.weight);
  }
  return builder.build();
}

std::size_t random_edge_target(std::size_t node_count, double target_avg_degree) {
  if (!(target_avg_degree >= 0.0) || !std::isfinite(target_avg_degree)) {
    throw ArgumentError("target average degree must be a finite value >= 0");
  }
  // The epsilon keeps exact products such as 3*2/2 from flooring to 2.
  const double raw = static_cast<double>(node_count) * target_avg_degree / 2.0;
  return static_cast<std::size_t>(std::floor(raw + 1e-9));
}

namespace {

// Unbiased draw in [0, bound).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Network random_network(const ProteinSet& nodes, double target_avg_degree, std::uint64_t seed) {
  const std::size_t n = nodes.size();
  const std::size_t target = random_edge_target(n, target_avg_degree);
  const std::uint64_t max_pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (target > max_pairs) {
    throw ArgumentError("target edge count " + std::to_string(target) +
                        " exceeds complete-graph bound " + std::to_string(max_pairs));
  }
  const std::vector<std::string> names(nodes.begin(), nodes.end());
  std::mt19937_64 rng(seed);

  // Sample whichever of the edge set or its complement is smaller.
  const bool sample_complement = target * 2 > max_pairs;
  const std::uint64_t draws = sample_complement ? max_pairs - target : target;
  std::unordered_set<std::uint64_t> picked;
  picked.reserve(draws * 2);
  std::vector<std::uint64_t> order;
  order.reserve(draws);
  while (picked.size() < draws) {
    std::uint64_t i = bounded(rng, n);
    std::uint64_t j = bounded(rng, n);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    const std::uint64_t key = i * n + j;
    if (picked.insert(key).second) order.push_back(key);
  }

  NetworkBuilder builder;
  for (const auto& name : names) builder.add_node(name);
  if (sample_complement) {
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = i + 1; j < n; ++j) {
        if (!picked.contains(i * n + j)) builder.add_edge(names[i], names[j], 1.0);
      }
    }
  } else {
    for (auto key : order) builder.add_edge(names[key / n], names[key % n], 1.0);
  }
  return builder.build();
}

std::vector<NodeId> resolve(const Network& g, const ProteinSet& s) {
  std::vector<NodeId> ids;
  ids.reserve(s.size());
  for (const auto& p : s) {
    if (auto id = g.find(p)) ids.push_back(*id);
  }
  // ProteinSet and node ids share lexicographic order.
  return ids;
}

namespace {

// Labels each entry of `ids` with a component index; returns the count.
std::size_t label_components(const Network& g, std::span<const NodeId> ids, std::vector<std::size_t>& label) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  label.assign(ids.size(), kUnset);
  std::size_t count = 0;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < ids.size(); ++start) {
    if (label[start] != kUnset) continue;
    label[start] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(ids[cur])) {
        auto it = std::lower_bound(ids.begin(), ids.end(), nb.node);
        if (it == ids.end() || *it != nb.node) continue;
        const auto idx = static_cast<std::size_t>(it - ids.begin());
        if (label[idx] == kUnset) {
          label[idx] = count;
          stack.push_back(idx);
        }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace

std::vector<std::size_t> component_sizes(const Network& g, std::span<const NodeId> ids) {
  std::vector<std::size_t> label;
  const std::size_t count = label_components(g, ids, label);
  std::vector<std::size_t> sizes(count, 0);
  for (auto l : label) ++sizes[l];
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

std::vector<ProteinSet> connected_components(const Network& g, const ProteinSet& within) {
  const auto ids = resolve(g, within);
  std::vector<std::size_t> label;
  const std::size_t count = label_components(g, ids, label);
  std::vector<ProteinSet> out(count);
  for (std::size_t i = 0; i < ids.size(); ++i) out[label[i]].insert(g.name(ids[i]));
  for (const auto& p : within) {
    if (!g.contains(p)) out.push_back(ProteinSet{p});
  }
  std::sort(out.begin(), out.end(), [](const ProteinSet& a, const ProteinSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return *a.begin() < *b.begin();
  });
  return out;
}

ProteinSet neighborhood(const Network& g, const ProteinSet& s) {
  ProteinSet out;
  for (const auto id : resolve(g, s)) {
    out.insert(g.name(id));
    for (const auto& nb : g.neighbors(id)) out.insert(g.name(nb.node));
  }
  return out;
}

NetworkStats stats(const Network& g) {
  NetworkStats st;
  st.protein_count = g.node_count();
  st.interaction_count = g.edge_count();
  st.avg_node_degree = st.protein_count == 0
                           ? 0.0
                           : 2.0 * static_cast<double>(st.interaction_count) /
                                 static_cast<double>(st.protein_count);
  return st;
}

}  // namespace sparc
