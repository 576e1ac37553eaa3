#include "inforank/sampling.hpp"

#include "inforank/errors.hpp"
#include "inforank/parallel.hpp"
#include "inforank/random.hpp"

namespace inforank {

Graph sample_graph(const ProbMatrix& p, std::uint64_t seed, std::vector<std::string> labels) {
  const std::size_t n = p.size();
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = p.directed() ? 0 : i + 1; j < n; ++j) {
      if (i == j) continue;
      const double pij = p(i, j);
      if (pij <= 0.0) continue;
      if (pij >= 1.0 || uniform01(rng) < pij) edges.emplace_back(i, j);
    }
  }
  return Graph(n, p.directed(), std::move(edges), std::move(labels));
}

std::vector<Graph> sample_ensemble(const Graph& g, const SampleSpec& spec, const SolverOptions& opts,
                                   std::size_t threads) {
  if (spec.count == 0) throw InputError("sample count must be at least 1");
  const ProbMatrix p = spec.conditioned_on ? solve_conditioned(g, *spec.conditioned_on, opts)
                                           : solve_benchmark(g, opts).probs;
  std::vector<Graph> out(spec.count);
  parallel_for(spec.count, threads, [&](std::size_t t) {
    out[t] = sample_graph(p, sample_seed(spec.seed, t), g.labels());
  });
  return out;
}

}  // namespace inforank
