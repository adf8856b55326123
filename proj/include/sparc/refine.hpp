#pragma once

#include <string>
#include <vector>

#include "sparc/complex_set.hpp"
#include "sparc/network.hpp"

namespace sparc {

struct SparcConfig {
  double delta = 0.40;           // CE acceptance threshold
  std::size_t max_growth = 20;   // proteins added per cluster; 0 = unlimited
  std::size_t min_output_size = 4;
};

struct AddedProtein {
  std::string protein;
  bool in_physical = true;  // false: reached only through functional edges

  friend bool operator==(const AddedProtein&, const AddedProtein&) = default;
};

struct RefinedCluster {
  std::string cluster_id;
  ProteinSet members;  // final members, input members plus additions
  double ce_before = 0.0;  // CE against the physical network
  double ce_after = 0.0;   // CE against the augmented network
  std::vector<AddedProtein> added;

  friend bool operator==(const RefinedCluster&, const RefinedCluster&) = default;
};

struct SparcResult {
  ComplexSet accepted;               // CE(G_P) >= delta, untouched
  std::vector<double> accepted_ce;   // CE(G_P), parallel to accepted
  std::vector<RefinedCluster> rescued;   // CE(G_A) >= delta after growth
  std::vector<RefinedCluster> rejected;  // best CE(G_A) stayed below delta

  friend bool operator==(const SparcResult&, const SparcResult&) = default;
};

/// Accept dense clusters as-is, re-score the rest on the union of the
/// physical and functional networks, and greedily grow each remaining
/// cluster by the neighbor that most strongly attaches to it among those
/// that raise its CE score.
SparcResult sparc(const ComplexSet& clusters, const Network& physical, const Network& functional,
                  const SparcConfig& config = {});

/// Same as sparc() with the augmented network already built.
SparcResult sparc_augmented(const ComplexSet& clusters, const Network& physical, const Network& augmented,
                            const SparcConfig& config = {});

/// Grows one cluster on `augmented`; the returned ce_before is CE on `augmented`.
RefinedCluster grow_cluster(const Complex& cluster, const Network& augmented, const Network& physical,
                            const SparcConfig& config);

/// CE after each prefix of `additions`, starting with the empty prefix.
/// Throws IntegrityError if an added protein is not in `augmented`.
std::vector<double> replay_growth(const Complex& cluster, const std::vector<std::string>& additions,
                                  const Network& augmented);

/// True when every value after the first exceeds its predecessor.
bool strictly_increasing(const std::vector<double>& values);

/// Accepted and rescued clusters of size >= min_output_size, in input order.
/// Rejected clusters (their final members) are included on request.
ComplexSet predicted_catalog(const SparcResult& result, const ComplexSet& input, const SparcConfig& config,
                             bool include_rejected = false);

}  // namespace sparc
