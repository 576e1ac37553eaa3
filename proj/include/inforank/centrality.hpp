#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "inforank/graph.hpp"

namespace inforank {

struct RankVector {
  std::string name;
  std::vector<double> scores;
  std::vector<double> rescaled;  // (R - min R) / (max R - min R), all 0 when flat

  static RankVector make(std::string name, std::vector<double> scores);
};

/// Min-max rescaling onto [0, 1]. A range within 1e-12 of the magnitude of
/// the scores counts as flat and maps to all zeros. NaN entries are skipped
/// and stay NaN.
std::vector<double> rescale(std::span<const double> scores);

/// Out-degree (degree when undirected).
RankVector degree_centrality(const Graph& g);

/// C_i = kappa_i / sum_j d_ij over nodes reachable from i along link
/// direction (hop distances); 0 when nothing is reachable.
RankVector closeness_centrality(const Graph& g, std::size_t threads = 1);

struct PageRankOptions {
  double alpha = 0.85;
  double tolerance = 1e-14;  // L1 change between iterates
  std::size_t max_iterations = 10000;
};

/// Power iteration on P_i = (1-a)/N + a sum_j a_ji P_j / k_j^out, normalised
/// to sum 1 after every step. Dangling nodes only receive the teleport term.
RankVector pagerank(const Graph& g, const PageRankOptions& opts = {});

}  // namespace inforank
