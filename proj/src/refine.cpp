#include "sparc/refine.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "sparc/derivability.hpp"

namespace sparc {

namespace {

void validate(const SparcConfig& config) {
  if (!(config.delta >= 0.0 && config.delta <= 1.0)) {
    throw ConfigError("SPARC delta must lie in [0,1], got " + format_real(config.delta));
  }
  if (config.min_output_size < 1) throw ConfigError("min_output_size must be >= 1");
}

struct Candidate {
  NodeId node;
  double attachment;
};

// Neighbors of the cluster outside it, strongest total attachment first,
// ties by smaller id.
std::vector<Candidate> rank_candidates(const Network& g, const ProteinSet& members) {
  const auto present = resolve(g, members);
  std::map<NodeId, double> attachment;
  for (const auto u : present) {
    for (const auto& nb : g.neighbors(u)) {
      if (!std::binary_search(present.begin(), present.end(), nb.node)) attachment[nb.node] += nb.weight;
    }
  }
  std::vector<Candidate> out;
  out.reserve(attachment.size());
  for (const auto& [node, w] : attachment) out.push_back({node, w});
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& a, const Candidate& b) { return a.attachment > b.attachment; });
  return out;
}

}  // namespace

RefinedCluster grow_cluster(const Complex& cluster, const Network& augmented, const Network& physical,
                            const SparcConfig& config) {
  validate(config);
  RefinedCluster out;
  out.cluster_id = cluster.id;
  out.members = cluster.members;
  double ce = ce_score(augmented, out.members);
  out.ce_before = ce;

  if (!meets_threshold(ce, config.delta)) {
    while (config.max_growth == 0 || out.added.size() < config.max_growth) {
      bool grew = false;
      for (const auto& cand : rank_candidates(augmented, out.members)) {
        const auto& name = augmented.name(cand.node);
        auto trial = out.members;
        trial.insert(name);
        const double next = ce_score(augmented, trial);
        if (next > ce + kScoreTolerance) {
          out.members = std::move(trial);
          out.added.push_back({name, physical.contains(name)});
          ce = next;
          grew = true;
          break;
        }
      }
      if (!grew) break;
    }
  }
  out.ce_after = ce;
  return out;
}

SparcResult sparc_augmented(const ComplexSet& clusters, const Network& physical, const Network& augmented,
                            const SparcConfig& config) {
  validate(config);
  if (clusters.empty()) throw ArgumentError("SPARC needs at least one input cluster");
  SparcResult result;
  for (const auto& c : clusters) {
    const double ce_physical = ce_score(physical, c.members);
    if (meets_threshold(ce_physical, config.delta)) {
      result.accepted.add(c);
      result.accepted_ce.push_back(ce_physical);
      continue;
    }
    auto refined = grow_cluster(c, augmented, physical, config);
    refined.ce_before = ce_physical;
    if (meets_threshold(refined.ce_after, config.delta)) {
      result.rescued.push_back(std::move(refined));
    } else {
      result.rejected.push_back(std::move(refined));
    }
  }
  return result;
}

SparcResult sparc(const ComplexSet& clusters, const Network& physical, const Network& functional,
                  const SparcConfig& config) {
  validate(config);
  const Network augmented = merge_networks(physical, functional);
  return sparc_augmented(clusters, physical, augmented, config);
}

std::vector<double> replay_growth(const Complex& cluster, const std::vector<std::string>& additions,
                                  const Network& augmented) {
  ProteinSet members = cluster.members;
  std::vector<double> out{ce_score(augmented, members)};
  for (const auto& p : additions) {
    if (!augmented.contains(p)) {
      throw IntegrityError("replay: added protein '" + p + "' is not in the augmented network");
    }
    members.insert(p);
    out.push_back(ce_score(augmented, members));
  }
  return out;
}

bool strictly_increasing(const std::vector<double>& values) {
  return std::adjacent_find(values.begin(), values.end(), std::greater_equal<>()) == values.end();
}

ComplexSet predicted_catalog(const SparcResult& result, const ComplexSet& input, const SparcConfig& config,
                             bool include_rejected) {
  std::unordered_map<std::string, const ProteinSet*> final_members;
  for (const auto& c : result.accepted) final_members[c.id] = &c.members;
  for (const auto& r : result.rescued) final_members[r.cluster_id] = &r.members;
  if (include_rejected) {
    for (const auto& r : result.rejected) final_members[r.cluster_id] = &r.members;
  }
  ComplexSet out;
  for (const auto& c : input) {
    auto it = final_members.find(c.id);
    if (it == final_members.end() || it->second->size() < config.min_output_size) continue;
    out.add({c.id, *it->second});
  }
  return out;
}

}  // namespace sparc
