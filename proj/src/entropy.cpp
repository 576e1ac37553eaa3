#include "inforank/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "inforank/errors.hpp"
#include "inforank/parallel.hpp"

namespace inforank {

namespace {
constexpr double kLogClamp = 1e-15;
}  // namespace

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  const double q = std::clamp(p, kLogClamp, 1.0 - kLogClamp);
  return -(q * std::log(q) + (1.0 - q) * std::log1p(-q));
}

BenchmarkEntropy benchmark_entropy(const ProbMatrix& p) {
  const std::size_t n = p.size();
  std::vector<long double> node(n, 0.0L);
  long double total = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = p.directed() ? 0 : i + 1; j < n; ++j) {
      if (i == j) continue;
      const long double h = binary_entropy(p(i, j));
      // Undirected: pair (i, j) sits in both rows. Directed: in row i and column j.
      node[i] += h;
      node[j] += h;
      total += h;
    }
  }
  BenchmarkEntropy out;
  out.per_node.assign(node.begin(), node.end());
  out.total = static_cast<double>(total);
  return out;
}

double ensemble_entropy(const ProbMatrix& p) {
  long double total = 0.0L;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = p.directed() ? 0 : i + 1; j < n; ++j) {
      if (i != j) total += binary_entropy(p(i, j));
    }
  }
  return static_cast<double>(total);
}

double conditioned_entropy(const Graph& g, NodeId node, const SolverOptions& opts) {
  return ensemble_entropy(solve_conditioned(g, node, opts));
}

bool EntropyReport::all_ok() const {
  return std::none_of(failure.begin(), failure.end(), [](const auto& f) { return f.has_value(); });
}

EntropyReport inforank(const Graph& g, const InfoRankOptions& opts) {
  const auto bench = benchmark_entropy(solve_benchmark(g, opts.solver).probs);
  if (!(bench.total > 0.0)) {
    throw UndefinedIndexError(
        "benchmark entropy is zero: the degree sequence fixes the whole graph, so InfoRank is undefined");
  }

  const std::size_t n = g.size();
  EntropyReport report;
  report.n = n;
  report.directed = g.directed();
  report.S0 = bench.total;
  report.S0_contrib = bench.per_node;
  report.S_cond.assign(n, std::numeric_limits<double>::quiet_NaN());
  report.I.assign(n, std::numeric_limits<double>::quiet_NaN());
  report.failure.assign(n, std::nullopt);

  parallel_for(n, opts.threads, [&](std::size_t i) {
    try {
      const double s = conditioned_entropy(g, i, opts.solver);
      report.S_cond[i] = s;
      report.I[i] = 1.0 - s / bench.total;
    } catch (const Error& e) {
      report.failure[i] = e.what();
    }
  });
  return report;
}

double inforank_subset(const Graph& g, std::span<const NodeId> nodes, const SolverOptions& opts) {
  if (nodes.empty() || nodes.size() >= g.size()) {
    throw InputError("subset must be non-empty and leave at least one node out");
  }
  std::vector<NodeId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("subset lists a node twice");
  }
  const double s0 = ensemble_entropy(solve_benchmark(g, opts).probs);
  if (!(s0 > 0.0)) throw UndefinedIndexError("benchmark entropy is zero; subset InfoRank is undefined");
  return 1.0 - ensemble_entropy(solve_conditioned(g, sorted, opts)) / s0;
}

namespace {

double sparse_term(double k, double scale) {
  if (k <= 0.0) return 0.0;
  return -k * std::log(k / scale) + k;
}

}  // namespace

std::vector<double> approx_sparse(const DegreeSeq& k) {
  const std::size_t n = k.size();
  std::vector<double> out(n, 0.0);
  if (k.links == 0) return out;
  const double links = static_cast<double>(k.links);
  for (std::size_t i = 0; i < n; ++i) {
    if (!k.directed) {
      out[i] = sparse_term(static_cast<double>(k.k[i]), std::sqrt(2.0 * links));
    } else {
      out[i] = sparse_term(static_cast<double>(k.k_out[i]), std::sqrt(links)) +
               sparse_term(static_cast<double>(k.k_in[i]), std::sqrt(links));
    }
  }
  return out;
}

std::vector<double> approx_meanfield(const DegreeSeq& k, std::size_t n) {
  std::vector<double> out(k.size(), 0.0);
  if (n < 2) return out;
  const double partners = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!k.directed) {
      out[i] = partners * binary_entropy(static_cast<double>(k.k[i]) / partners);
    } else {
      out[i] = partners * (binary_entropy(static_cast<double>(k.k_out[i]) / partners) +
                           binary_entropy(static_cast<double>(k.k_in[i]) / partners));
    }
  }
  return out;
}

}  // namespace inforank
