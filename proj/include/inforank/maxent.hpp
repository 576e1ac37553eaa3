#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "inforank/graph.hpp"

namespace inforank {

enum class SolverMethod {
  kAuto,        // Newton while the problem is small enough, fixed point otherwise
  kNewton,      // damped Newton on the convex dual, in log-parameters
  kFixedPoint,  // x_i <- k_i / sum_j x_j / (1 + x_i x_j)
};

struct SolverOptions {
  double tolerance = 1e-10;          // max absolute degree residual
  std::size_t max_iterations = 100000;
  SolverMethod method = SolverMethod::kAuto;
  // kAuto switches to the fixed-point map above this many unknowns (degree
  // classes, doubled for directed problems).
  std::size_t newton_limit = 3000;
};

/// Fitness parameters of the maximum-entropy solution. Nodes whose degree
/// saturates every available partner carry x = +inf; nodes with zero degree
/// carry exactly 0.
struct ParamVector {
  std::vector<double> x;  // undirected fitness, or out-fitness when directed
  std::vector<double> y;  // in-fitness, directed only
  bool converged = false;
  double residual = 0.0;  // max |k_i - sum_j p_ij| over both degree sides
  std::size_t iterations = 0;
};

/// Dense pairwise link probabilities with a zero diagonal.
class ProbMatrix {
 public:
  ProbMatrix() = default;
  ProbMatrix(std::size_t n, bool directed) : n_(n), directed_(directed), p_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  bool directed() const { return directed_; }

  double operator()(std::size_t i, std::size_t j) const { return p_[i * n_ + j]; }

  // Writes both (i, j) and (j, i) for undirected matrices.
  void set(std::size_t i, std::size_t j, double value) {
    p_[i * n_ + j] = value;
    if (!directed_) p_[j * n_ + i] = value;
  }

  bool has_forced() const { return !forced_.empty(); }
  bool forced(std::size_t i, std::size_t j) const {
    return !forced_.empty() && forced_[i * n_ + j] != 0;
  }
  void set_forced(std::size_t i, std::size_t j) {
    if (forced_.empty()) forced_.assign(n_ * n_, 0);
    forced_[i * n_ + j] = 1;
    if (!directed_) forced_[j * n_ + i] = 1;
  }

  double row_sum(std::size_t i) const;
  double col_sum(std::size_t j) const;
  std::size_t nonzeros() const;
  // Expected number of links: sum of p over ordered pairs, halved if undirected.
  double expected_links() const;

 private:
  std::size_t n_ = 0;
  bool directed_ = false;
  std::vector<double> p_;
  std::vector<std::uint8_t> forced_;
};

struct MaxEntSolution {
  ParamVector params;
  ProbMatrix probs;
};

/// Undirected configuration model, p_ij = x_i x_j / (1 + x_i x_j).
MaxEntSolution solve_ubcm(const DegreeSeq& k, const SolverOptions& opts = {});

/// Directed configuration model, p_ij = x_i y_j / (1 + x_i y_j).
MaxEntSolution solve_dbcm(const DegreeSeq& k, const SolverOptions& opts = {});

/// Dispatches on the graph's directedness.
MaxEntSolution solve_benchmark(const Graph& g, const SolverOptions& opts = {});

/// Ensemble after fixing every link incident to `nodes` to its observed value.
/// The forced mask marks exactly those entries; the rest solve the reduced
/// degree system on the remaining nodes.
ProbMatrix solve_conditioned(const Graph& g, std::span<const NodeId> nodes,
                             const SolverOptions& opts = {});
ProbMatrix solve_conditioned(const Graph& g, NodeId node, const SolverOptions& opts = {});

double max_degree_residual(const ProbMatrix& p, const DegreeSeq& k);

void write_dense_csv(std::ostream& out, const ProbMatrix& p);
// "i,j,p" for every non-zero entry (i < j when undirected), preceded by a
// "# n=<n> directed=<0|1>" line.
void write_triplets(std::ostream& out, const ProbMatrix& p);
// Dense up to 2000 nodes, triplets beyond.
void write_prob_matrix(std::ostream& out, const ProbMatrix& p);

}  // namespace inforank
