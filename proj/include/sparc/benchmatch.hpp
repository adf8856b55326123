#pragma once

#include <span>
#include <string>
#include <vector>

#include "sparc/complex_set.hpp"
#include "sparc/derivability.hpp"
#include "sparc/network.hpp"

namespace sparc {

enum class RecallDenominator {
  Derivable,      // #derived / #k-protein-derivable benchmarks
  AllBenchmarks,  // #derived / |B|
};

struct MatchConfig {
  double j_min = 0.50;
  std::size_t k = 4;
  RecallDenominator recall_denominator = RecallDenominator::Derivable;
};

struct PairMatch {
  std::string benchmark_id;
  std::string prediction_id;
  double jaccard = 0.0;

  friend bool operator==(const PairMatch&, const PairMatch&) = default;
};

/// Best Jaccard any prediction reaches for one derivable benchmark.
struct BenchmarkAccuracy {
  std::string benchmark_id;
  double best_jaccard = 0.0;

  friend bool operator==(const BenchmarkAccuracy&, const BenchmarkAccuracy&) = default;
};

struct EvalReport {
  double j_min = 0.50;
  std::size_t k = 4;
  std::size_t benchmark_count = 0;
  std::size_t predicted_count = 0;
  std::size_t matched_count = 0;
  std::size_t derivable_count = 0;
  std::size_t derived_count = 0;
  double precision = 0.0;
  double recall = 0.0;
  std::vector<PairMatch> pair_matches;  // benchmark order, then prediction order
  std::vector<BenchmarkAccuracy> accuracies;  // one per derivable benchmark

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

/// |a ∩ b| / |a ∪ b|. Throws ArgumentError when both sets are empty.
double jaccard(const ProteinSet& a, const ProteinSet& b);

/// Smallest overlap that reaches J >= 0.5 for sets of these sizes.
constexpr std::size_t min_overlap_half(std::size_t a, std::size_t b) { return (a + b + 2) / 3; }

EvalReport evaluate(const ComplexSet& benchmarks, const ComplexSet& predictions, const Network& g,
                    const MatchConfig& config = {});

/// Fills precision and recall from the counts.
void finalize_rates(EvalReport& report, RecallDenominator denominator);

enum class ScoreKind { CE, CS, ES, Density };

/// Pearson correlation between a derivability score and the accuracy
/// (best Jaccard if it reaches j_min, else 0) over the derivable benchmarks
/// of `eval`. Throws ArgumentError on fewer than two points or zero variance.
double correlate(const DerivabilityReport& report, const EvalReport& eval, ScoreKind kind = ScoreKind::CE);

double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace sparc
