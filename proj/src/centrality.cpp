#include "inforank/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "inforank/errors.hpp"
#include "inforank/parallel.hpp"

namespace inforank {

RankVector RankVector::make(std::string name, std::vector<double> scores) {
  RankVector r;
  r.name = std::move(name);
  r.rescaled = rescale(scores);
  r.scores = std::move(scores);
  return r;
}

std::vector<double> rescale(std::span<const double> scores) {
  if (scores.empty()) throw InputError("cannot rescale an empty vector");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double s : scores) {
    if (std::isnan(s)) continue;
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  std::vector<double> out(scores.size(), 0.0);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (std::isnan(scores[i])) out[i] = scores[i];
  }
  const double range = hi - lo;
  const double magnitude = std::max(std::abs(lo), std::abs(hi));
  if (!(range > 1e-12 * magnitude) || !std::isfinite(range)) return out;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isnan(scores[i])) out[i] = (scores[i] - lo) / range;
  }
  return out;
}

RankVector degree_centrality(const Graph& g) {
  std::vector<double> d(g.size());
  for (NodeId i = 0; i < g.size(); ++i) d[i] = static_cast<double>(g.out_degree(i));
  return RankVector::make("degree", std::move(d));
}

RankVector closeness_centrality(const Graph& g, std::size_t threads) {
  const std::size_t n = g.size();
  std::vector<double> c(n, 0.0);
  parallel_for(n, threads, [&](std::size_t src) {
    std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
    std::queue<NodeId> frontier;
    dist[src] = 0;
    frontier.push(src);
    std::size_t reached = 0;
    std::size_t total = 0;
    while (!frontier.empty()) {
      const NodeId v = frontier.front();
      frontier.pop();
      for (NodeId w : g.out_neighbors(v)) {
        if (dist[w] != std::numeric_limits<std::size_t>::max()) continue;
        dist[w] = dist[v] + 1;
        ++reached;
        total += dist[w];
        frontier.push(w);
      }
    }
    c[src] = reached == 0 ? 0.0 : static_cast<double>(reached) / static_cast<double>(total);
  });
  return RankVector::make("closeness", std::move(c));
}

RankVector pagerank(const Graph& g, const PageRankOptions& opts) {
  if (!(opts.alpha >= 0.0 && opts.alpha < 1.0)) throw InputError("PageRank damping must lie in [0, 1)");
  const std::size_t n = g.size();
  if (n == 0) return RankVector::make("pagerank", {});
  const double teleport = (1.0 - opts.alpha) / static_cast<double>(n);
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  if (opts.alpha == 0.0) return RankVector::make("pagerank", std::move(p));

  // Summation noise puts a floor under the attainable L1 change.
  const double tol = std::max(opts.tolerance, 4.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon());
  std::vector<double> next(n);
  std::size_t it = 0;
  double change = std::numeric_limits<double>::infinity();
  for (; it < opts.max_iterations; ++it) {
    std::fill(next.begin(), next.end(), teleport);
    for (NodeId j = 0; j < n; ++j) {
      const auto outs = g.out_neighbors(j);
      if (outs.empty()) continue;
      const double share = opts.alpha * p[j] / static_cast<double>(outs.size());
      for (NodeId i : outs) next[i] += share;
    }
    double sum = 0.0;
    for (double v : next) sum += v;
    change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= sum;
      change += std::abs(next[i] - p[i]);
    }
    p.swap(next);
    if (change < tol) break;
  }
  if (!(change < tol)) {
    throw SolverError("PageRank did not converge in " + std::to_string(opts.max_iterations) + " iterations",
                      change);
  }
  return RankVector::make("pagerank", std::move(p));
}

}  // namespace inforank
