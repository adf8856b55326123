#include "sparc/consensus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

#include "sparc/benchmatch.hpp"

namespace sparc {

namespace {

using Triplet = std::array<std::size_t, 3>;

struct Candidate {
  Triplet index;
  double score;
  // Permutation-invariant tie-break: the three complexes as a sorted list.
  std::vector<std::pair<std::string, std::vector<std::string>>> key;
};

using PairTable = std::map<std::pair<std::size_t, std::size_t>, double>;

// Jaccard for every pair with non-empty overlap; absent pairs are 0.
PairTable pair_table(const ComplexSet& x, const ComplexSet& y) {
  PairTable out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const double jac = jaccard(x[i].members, y[j].members);
      if (jac > 0.0) out.emplace(std::pair{i, j}, jac);
    }
  }
  return out;
}

double lookup(const PairTable& t, std::size_t i, std::size_t j) {
  auto it = t.find({i, j});
  return it == t.end() ? 0.0 : it->second;
}

}  // namespace

ComplexSet consensus(const std::vector<ComplexSet>& sets, const ConsensusConfig& config) {
  if (sets.size() != 3) {
    throw ArgumentError("consensus needs exactly three input sets, got " + std::to_string(sets.size()));
  }
  if (!(config.pair_overlap_min > 0.0 && config.pair_overlap_min <= 1.0)) {
    throw ConfigError("pair_overlap_min must lie in (0,1]");
  }
  if (config.min_membership < 2 || config.min_membership > 3) {
    throw ConfigError("min_membership must be 2 or 3");
  }
  const auto& a = sets[0];
  const auto& b = sets[1];
  const auto& c = sets[2];
  const PairTable ab = pair_table(a, b);
  const PairTable bc = pair_table(b, c);
  const PairTable ac = pair_table(a, c);
  const double t = config.pair_overlap_min;

  // Any qualifying triplet contains at least one strong pair; seed from those.
  std::set<Triplet> seeds;
  for (const auto& [ij, jac] : ab) {
    if (jac >= t) for (std::size_t k = 0; k < c.size(); ++k) seeds.insert({ij.first, ij.second, k});
  }
  for (const auto& [jk, jac] : bc) {
    if (jac >= t) for (std::size_t i = 0; i < a.size(); ++i) seeds.insert({i, jk.first, jk.second});
  }
  for (const auto& [ik, jac] : ac) {
    if (jac >= t) for (std::size_t j = 0; j < b.size(); ++j) seeds.insert({ik.first, j, ik.second});
  }

  std::vector<Candidate> candidates;
  for (const auto& tri : seeds) {
    std::array<double, 3> pj{lookup(ab, tri[0], tri[1]), lookup(bc, tri[1], tri[2]), lookup(ac, tri[0], tri[2])};
    const auto strong = std::count_if(pj.begin(), pj.end(), [t](double v) { return v >= t; });
    if (strong < 2) continue;
    std::sort(pj.begin(), pj.end());
    Candidate cand{tri, pj[0] + pj[1] + pj[2], {}};
    for (int s = 0; s < 3; ++s) {
      const auto& cx = sets[s][tri[s]];
      cand.key.emplace_back(cx.id, std::vector<std::string>(cx.members.begin(), cx.members.end()));
    }
    std::sort(cand.key.begin(), cand.key.end());
    candidates.push_back(std::move(cand));
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    if (x.score != y.score) return x.score > y.score;
    return std::tie(x.key, x.index) < std::tie(y.key, y.index);
  });

  std::array<std::vector<bool>, 3> used{std::vector<bool>(a.size()), std::vector<bool>(b.size()),
                                        std::vector<bool>(c.size())};
  std::set<ProteinSet> merged;
  for (const auto& cand : candidates) {
    if (used[0][cand.index[0]] || used[1][cand.index[1]] || used[2][cand.index[2]]) continue;
    std::map<std::string_view, std::size_t> votes;
    for (int s = 0; s < 3; ++s) {
      used[s][cand.index[s]] = true;
      for (const auto& p : sets[s][cand.index[s]].members) ++votes[p];
    }
    ProteinSet members;
    for (const auto& [p, n] : votes) {
      if (n >= config.min_membership) members.emplace(p);
    }
    if (!members.empty()) merged.insert(std::move(members));
  }

  std::vector<ProteinSet> ordered(merged.begin(), merged.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ProteinSet& x, const ProteinSet& y) { return x.size() > y.size(); });
  ComplexSet out;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    out.add({"consensus_" + std::to_string(i + 1), std::move(ordered[i])});
  }
  return out;
}

}  // namespace sparc
