#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "inforank/graph.hpp"
#include "inforank/maxent.hpp"

namespace inforank {

/// -[p ln p + (1-p) ln(1-p)] in nats, with 0 ln 0 = 0.
double binary_entropy(double p);

struct BenchmarkEntropy {
  double total = 0.0;             // S0
  std::vector<double> per_node;   // S0^(i); total == sum(per_node) / 2
};

/// S0 and its per-node split. Undirected: S0 = sum over unordered pairs.
/// Directed: sum over ordered pairs, with node i's share covering its row and
/// its column.
BenchmarkEntropy benchmark_entropy(const ProbMatrix& p);

/// Shannon entropy of the product-Bernoulli ensemble described by p.
double ensemble_entropy(const ProbMatrix& p);

struct InfoRankOptions {
  SolverOptions solver;
  std::size_t threads = 1;
};

/// Entropy left after fixing node's links, S_(i).
double conditioned_entropy(const Graph& g, NodeId node, const SolverOptions& opts = {});

struct EntropyReport {
  std::size_t n = 0;
  bool directed = false;
  double S0 = 0.0;
  std::vector<double> S0_contrib;
  std::vector<double> S_cond;           // NaN for flagged nodes
  std::vector<double> I;                // NaN for flagged nodes
  std::vector<std::optional<std::string>> failure;  // set when a node's solve failed

  bool all_ok() const;
};

/// InfoRank I_i = 1 - S_(i) / S0 for every node. Throws UndefinedIndexError
/// when S0 is zero. A node whose reduced system fails is flagged in `failure`
/// and the others are still reported.
EntropyReport inforank(const Graph& g, const InfoRankOptions& opts = {});

/// Same quantity for a set of nodes conditioned jointly.
double inforank_subset(const Graph& g, std::span<const NodeId> nodes, const SolverOptions& opts = {});

/// Sparse-limit estimate of S0^(i):  -k ln(k / sqrt(2L)) + k, and the
/// out/in sum with sqrt(L) when directed. Zero-degree sides contribute 0.
std::vector<double> approx_sparse(const DegreeSeq& k);

/// Mean-field estimate of S0^(i) with p = k_i / (n - 1), per side when
/// directed.
std::vector<double> approx_meanfield(const DegreeSeq& k, std::size_t n);

}  // namespace inforank
