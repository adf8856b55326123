#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include "sparc/complex_set.hpp"
#include "sparc/network.hpp"

namespace sparc {

struct MclConfig {
  double inflation = 2.5;
  int expansion = 2;
  int max_iterations = 200;
  double convergence_eps = 1e-6;
  double prune_threshold = 1e-5;
  /// Fixed self-loop weight; unset means the node's maximum incident weight.
  std::optional<double> self_loop_weight;
};

template <typename Scalar>
using FlowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

void validate(const MclConfig& config);

/// Scales every column to sum 1. An all-zero column becomes the unit vector
/// on the diagonal.
template <typename Derived>
void normalize_columns(Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const Scalar s = m.col(j).sum();
    if (s > Scalar(0)) {
      m.col(j) /= s;
    } else {
      m.col(j).setZero();
      m(j, j) = Scalar(1);
    }
  }
}

template <typename Derived>
typename Derived::Scalar max_column_deviation(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.cols() == 0) return Scalar(0);
  return (m.colwise().sum().array() - Scalar(1)).abs().maxCoeff();
}

/// One round of expansion, inflation and pruning on a column-stochastic matrix.
template <typename Scalar>
FlowMatrix<Scalar> flow_step(const FlowMatrix<Scalar>& m, const MclConfig& config) {
  FlowMatrix<Scalar> expanded = m;
  for (int i = 1; i < config.expansion; ++i) expanded = expanded * m;
  FlowMatrix<Scalar> out = expanded.array().pow(static_cast<Scalar>(config.inflation)).matrix();
  normalize_columns(out);
  const auto cutoff = static_cast<Scalar>(config.prune_threshold);
  out = (out.array() < cutoff).select(Scalar(0), out.array()).matrix();
  normalize_columns(out);
  return out;
}

/// Column-stochastic flow matrix of g over `ids` (row/column i is ids[i]),
/// with self-loops added.
template <typename Scalar>
FlowMatrix<Scalar> initial_flow(const Network& g, std::span<const NodeId> ids, const MclConfig& config) {
  const auto n = static_cast<Eigen::Index>(ids.size());
  FlowMatrix<Scalar> m = FlowMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double loop = 0.0;
    for (const auto& nb : g.neighbors(ids[j])) {
      auto it = std::lower_bound(ids.begin(), ids.end(), nb.node);
      if (it == ids.end() || *it != nb.node) continue;
      m(it - ids.begin(), j) = static_cast<Scalar>(nb.weight);
      loop = std::max(loop, nb.weight);
    }
    if (config.self_loop_weight) loop = *config.self_loop_weight;
    m(j, j) = static_cast<Scalar>(loop > 0.0 ? loop : 1.0);
  }
  normalize_columns(m);
  return m;
}

struct MclResult {
  ComplexSet clusters;
  bool converged = true;
  int iterations = 0;  // largest iteration count over components
};

/// Called after every flow step with the component's matrix and the
/// 1-based iteration number.
using MclObserver = std::function<void(const FlowMatrix<double>&, int)>;

/// Markov clustering. The flow is simulated per connected component;
/// clusters are read off the attractor rows of the limit matrix, may
/// overlap, and singletons are dropped. Clusters are ordered largest first,
/// ties by smallest member, and named mcl_1, mcl_2, ...
MclResult mcl_cluster(const Network& g, const MclConfig& config = {}, const MclObserver& observer = {});

}  // namespace sparc
