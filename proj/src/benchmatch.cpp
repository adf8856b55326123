#include "sparc/benchmatch.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <iterator>
#include <unordered_map>

namespace sparc {

double jaccard(const ProteinSet& a, const ProteinSet& b) {
  if (a.empty() && b.empty()) throw ArgumentError("jaccard undefined for two empty sets");
  std::size_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

void finalize_rates(EvalReport& report, RecallDenominator denominator) {
  report.precision = report.predicted_count == 0
                         ? 0.0
                         : static_cast<double>(report.matched_count) / static_cast<double>(report.predicted_count);
  const std::size_t base =
      denominator == RecallDenominator::Derivable ? report.derivable_count : report.benchmark_count;
  report.recall = base == 0 ? 0.0 : static_cast<double>(report.derived_count) / static_cast<double>(base);
}

EvalReport evaluate(const ComplexSet& benchmarks, const ComplexSet& predictions, const Network& g,
                    const MatchConfig& config) {
  if (!(config.j_min > 0.0 && config.j_min <= 1.0)) throw ConfigError("j_min must lie in (0,1]");
  if (config.k < 1) throw ConfigError("k must be >= 1");

  EvalReport report;
  report.j_min = config.j_min;
  report.k = config.k;
  report.benchmark_count = benchmarks.size();
  report.predicted_count = predictions.size();

  std::vector<bool> matched(predictions.size(), false);
  for (const auto& b : benchmarks) {
    if (resolve(g, b.members).size() < config.k) continue;
    ++report.derivable_count;
    BenchmarkAccuracy acc{b.id, 0.0};
    bool derived = false;
    for (std::size_t j = 0; j < predictions.size(); ++j) {
      const double jac = jaccard(b.members, predictions[j].members);
      acc.best_jaccard = std::max(acc.best_jaccard, jac);
      if (jac >= config.j_min) {
        derived = true;
        matched[j] = true;
        report.pair_matches.push_back({b.id, predictions[j].id, jac});
      }
    }
    if (derived) ++report.derived_count;
    report.accuracies.push_back(std::move(acc));
  }
  report.matched_count = static_cast<std::size_t>(std::count(matched.begin(), matched.end(), true));
  finalize_rates(report, config.recall_denominator);
  return report;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("pearson: vectors differ in length");
  if (x.size() < 2) throw ArgumentError("pearson: need at least two points");
  const auto n = static_cast<Eigen::Index>(x.size());
  const Eigen::Map<const Eigen::VectorXd> xv(x.data(), n);
  const Eigen::Map<const Eigen::VectorXd> yv(y.data(), n);
  const Eigen::VectorXd dx = xv.array() - xv.mean();
  const Eigen::VectorXd dy = yv.array() - yv.mean();
  const double sxx = dx.squaredNorm();
  const double syy = dy.squaredNorm();
  if (!(sxx > 0.0) || !(syy > 0.0)) throw ArgumentError("pearson: undefined correlation (zero variance)");
  return std::clamp(dx.dot(dy) / std::sqrt(sxx * syy), -1.0, 1.0);
}

double correlate(const DerivabilityReport& report, const EvalReport& eval, ScoreKind kind) {
  std::unordered_map<std::string_view, const DerivabilityRecord*> by_id;
  for (const auto& r : report.records) by_id.emplace(r.complex_id, &r);

  std::vector<double> scores;
  std::vector<double> accuracy;
  for (const auto& acc : eval.accuracies) {
    auto it = by_id.find(acc.benchmark_id);
    if (it == by_id.end()) {
      throw IntegrityError("correlate: benchmark '" + acc.benchmark_id + "' missing from derivability report");
    }
    const auto& r = *it->second;
    double score = 0.0;
    switch (kind) {
      case ScoreKind::CE: score = r.ce; break;
      case ScoreKind::CS: score = r.cs; break;
      case ScoreKind::ES: score = r.es; break;
      case ScoreKind::Density:
        if (!r.density) continue;
        score = *r.density;
        break;
    }
    scores.push_back(score);
    accuracy.push_back(acc.best_jaccard >= eval.j_min ? acc.best_jaccard : 0.0);
  }
  return pearson(scores, accuracy);
}

}  // namespace sparc
