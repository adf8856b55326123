#include "sparc/mcl.hpp"

#include <set>

namespace sparc {

void validate(const MclConfig& config) {
  if (!(config.inflation > 1.0)) throw ConfigError("MCL inflation must be > 1");
  if (config.expansion < 2) throw ConfigError("MCL expansion must be >= 2");
  if (config.max_iterations < 1) throw ConfigError("MCL max_iterations must be >= 1");
  if (!(config.convergence_eps > 0.0)) throw ConfigError("MCL convergence_eps must be > 0");
  if (!(config.prune_threshold >= 0.0)) throw ConfigError("MCL prune_threshold must be >= 0");
  if (config.self_loop_weight && !(*config.self_loop_weight > 0.0)) {
    throw ConfigError("MCL self_loop_weight must be > 0");
  }
}

namespace {

struct ComponentFlow {
  FlowMatrix<double> limit;
  bool converged = false;
  int iterations = 0;
};

ComponentFlow simulate(const Network& g, std::span<const NodeId> ids, const MclConfig& config,
                       const MclObserver& observer) {
  ComponentFlow out;
  out.limit = initial_flow<double>(g, ids, config);
  for (int it = 1; it <= config.max_iterations; ++it) {
    FlowMatrix<double> next = flow_step(out.limit, config);
    const double change = (next - out.limit).cwiseAbs().maxCoeff();
    out.limit = std::move(next);
    out.iterations = it;
    if (observer) observer(out.limit, it);
    if (change < config.convergence_eps) {
      out.converged = true;
      break;
    }
  }
  return out;
}

// Attractor rows and the columns flowing into them.
std::set<ProteinSet> interpret(const Network& g, std::span<const NodeId> ids, const FlowMatrix<double>& m) {
  const auto n = m.rows();
  std::set<ProteinSet> clusters;
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(m(i, i) > 0.0)) continue;
    ProteinSet cluster{g.name(ids[i])};
    covered[i] = true;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (m(i, j) > 0.0) {
        cluster.insert(g.name(ids[j]));
        covered[j] = true;
      }
    }
    clusters.insert(std::move(cluster));
  }
  // Without convergence some columns may not reach an attractor yet.
  for (Eigen::Index j = 0; j < n; ++j) {
    if (!covered[j]) clusters.insert(ProteinSet{g.name(ids[j])});
  }
  return clusters;
}

}  // namespace

MclResult mcl_cluster(const Network& g, const MclConfig& config, const MclObserver& observer) {
  validate(config);
  if (g.empty()) throw ArgumentError("MCL needs a non-empty network");
  MclResult result;
  std::vector<ProteinSet> found;
  for (const auto& component : connected_components(g, g.node_set())) {
    if (component.size() < 2) continue;
    const auto ids = resolve(g, component);
    const auto flow = simulate(g, ids, config, observer);
    result.converged = result.converged && flow.converged;
    result.iterations = std::max(result.iterations, flow.iterations);
    for (auto& c : interpret(g, ids, flow.limit)) {
      if (c.size() >= 2) found.push_back(c);
    }
  }
  std::sort(found.begin(), found.end(), [](const ProteinSet& a, const ProteinSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (std::size_t i = 0; i < found.size(); ++i) {
    result.clusters.add({"mcl_" + std::to_string(i + 1), std::move(found[i])});
  }
  return result;
}

}  // namespace sparc
