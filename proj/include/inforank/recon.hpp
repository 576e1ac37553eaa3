#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "inforank/centrality.hpp"
#include "inforank/entropy.hpp"
#include "inforank/graph.hpp"
#include "inforank/maxent.hpp"

namespace inforank {

/// Expected reconstruction accuracy (<TP> + <TN>) / (N (N - 1)) over ordered
/// pairs. Undirected inputs count each pair in both orders.
double expected_accuracy(const ProbMatrix& p, const Graph& g);

/// Expected accuracy of the ensemble conditioned on `node`'s links.
double node_accuracy(const Graph& g, NodeId node, const SolverOptions& opts = {});

/// Product-moment correlation. Throws UndefinedCorrelationError when either
/// vector is flat.
double pearson(std::span<const double> x, std::span<const double> y);

struct IndexCorrelation {
  std::string index_name;
  std::optional<double> r;      // empty when undefined
  std::optional<std::string> error;
};

struct AccuracyReport {
  double benchmark_accuracy = 0.0;
  std::vector<double> accuracy;  // A_i, NaN when the node's solve failed
  std::vector<std::optional<std::string>> failure;
  std::vector<IndexCorrelation> correlations;  // one per supplied rank vector
};

/// A_i for every node and its correlation with each rescaled rank vector.
/// Flagged nodes are dropped from the correlations.
AccuracyReport accuracy_report(const Graph& g, std::span<const RankVector> ranks,
                               const InfoRankOptions& opts = {});

}  // namespace inforank
