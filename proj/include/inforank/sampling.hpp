#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inforank/graph.hpp"
#include "inforank/maxent.hpp"

namespace inforank {

struct SampleSpec {
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::optional<NodeId> conditioned_on;
};

/// One independent Bernoulli(p_ij) draw per free entry (per unordered pair
/// when undirected). Entries at exactly 0 or 1, forced ones included, are
/// copied without consuming randomness. Labels default to "0".."n-1".
Graph sample_graph(const ProbMatrix& p, std::uint64_t seed, std::vector<std::string> labels = {});

/// Seed of draw t in a batch: seed XOR t, so each draw is reproducible alone.
inline std::uint64_t sample_seed(std::uint64_t seed, std::size_t t) { return seed ^ static_cast<std::uint64_t>(t); }

/// `spec.count` draws from the benchmark ensemble of g, or from the ensemble
/// conditioned on `spec.conditioned_on`. Sample t uses sample_seed(seed, t).
std::vector<Graph> sample_ensemble(const Graph& g, const SampleSpec& spec, const SolverOptions& opts = {},
                                   std::size_t threads = 1);

}  // namespace inforank
