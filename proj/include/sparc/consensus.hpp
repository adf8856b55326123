#pragma once

#include <vector>

#include "sparc/complex_set.hpp"

namespace sparc {

struct ConsensusConfig {
  double pair_overlap_min = 0.70;
  std::size_t min_membership = 2;
};

/// Three-way agreement over predictions from three differently scored
/// networks.
///
/// A triplet (one complex per input set) qualifies when at least two of its
/// three pairs reach pair_overlap_min Jaccard. Qualifying triplets are taken
/// greedily by descending total pairwise Jaccard, each input complex used at
/// most once. Each chosen triplet yields the proteins found in at least
/// min_membership of its three complexes. Output is deduplicated, ordered
/// largest first then lexicographically, and named consensus_1, ...
ComplexSet consensus(const std::vector<ComplexSet>& sets, const ConsensusConfig& config = {});

}  // namespace sparc
