#include <gtest/gtest.h>

#include <cmath>

#include "inforank/generators.hpp"
#include "inforank/maxent.hpp"
#include "inforank/sampling.hpp"

using namespace inforank;

TEST(Sampling, SameSeedSameGraph) {
  const auto P = solve_benchmark(erdos_renyi(40, 0.1, true, 2)).probs;
  EXPECT_EQ(sample_graph(P, 99), sample_graph(P, 99));
  EXPECT_FALSE(sample_graph(P, 99) == sample_graph(P, 100));
}

TEST(Sampling, DeterministicEntriesAreCopied) {
  Graph g = barabasi_albert(30, 2, false, 4);
  ProbMatrix P(30, false);
  for (const auto& [u, v] : g.edges()) P.set(u, v, 1.0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_EQ(sample_graph(P, seed), g);
}

TEST(Sampling, ZeroAndOneEntriesConsumeNoRandomness) {
  // Adding a deterministic row must not shift the draws of the free pairs.
  ProbMatrix a(3, true), b(4, true);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) {
        a.set(i, j, 0.5);
        b.set(i + 1, j + 1, 0.5);
      }
  b.set(0, 2, 1.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph sa = sample_graph(a, seed);
    const Graph sb = sample_graph(b, seed);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) EXPECT_EQ(sa.has_edge(i, j), sb.has_edge(i + 1, j + 1));
    EXPECT_TRUE(sb.has_edge(0, 2));
  }
}

TEST(Sampling, EnsembleUsesPerDrawSeeds) {
  Graph g = erdos_renyi(30, 0.15, false, 3);
  SampleSpec spec;
  spec.count = 6;
  spec.seed = 1234;
  const auto samples = sample_ensemble(g, spec);
  const auto P = solve_benchmark(g).probs;
  ASSERT_EQ(samples.size(), 6u);
  for (std::size_t t = 0; t < 6; ++t) {
    EXPECT_EQ(sample_seed(1234, t), 1234u ^ t);
    EXPECT_EQ(samples[t], sample_graph(P, sample_seed(1234, t)));
  }
}

TEST(Sampling, ThreadCountDoesNotChangeSamples) {
  Graph g = erdos_renyi(30, 0.15, true, 3);
  SampleSpec spec;
  spec.count = 12;
  spec.seed = 7;
  EXPECT_EQ(sample_ensemble(g, spec, {}, 1), sample_ensemble(g, spec, {}, 4));
}

TEST(Sampling, ConditionedSamplesKeepTheEgoNetwork) {
  Graph g = barabasi_albert(40, 2, true, 5);
  SampleSpec spec;
  spec.count = 30;
  spec.seed = 11;
  spec.conditioned_on = 3;
  for (const auto& s : sample_ensemble(g, spec)) {
    for (NodeId j = 0; j < 40; ++j) {
      if (j == 3) continue;
      EXPECT_EQ(s.has_edge(3, j), g.has_edge(3, j));
      EXPECT_EQ(s.has_edge(j, 3), g.has_edge(j, 3));
    }
  }
}

TEST(Sampling, LabelsTravelWithSamples) {
  Graph g(3, false, {{0, 1}, {1, 2}}, {"x", "y", "z"});
  SampleSpec spec;
  const auto s = sample_ensemble(g, spec);
  EXPECT_EQ(s.front().labels(), g.labels());
}

TEST(Sampling, PairFrequenciesMatchProbabilities) {
  for (bool directed : {false, true}) {
    Graph g = erdos_renyi(50, 0.1, directed, 21);
    const auto P = solve_benchmark(g).probs;
    const std::size_t draws = 2000;
    std::vector<std::size_t> hits(50 * 50, 0);
    for (std::size_t t = 0; t < draws; ++t) {
      const Graph s = sample_graph(P, sample_seed(77, t));
      for (const auto& [u, v] : s.edges()) ++hits[u * 50 + v];
    }
    std::size_t outside = 0, pairs = 0;
    for (std::size_t i = 0; i < 50; ++i)
      for (std::size_t j = directed ? 0 : i + 1; j < 50; ++j) {
        if (i == j) continue;
        ++pairs;
        const double p = P(i, j);
        const double freq = static_cast<double>(hits[i * 50 + j]) / draws;
        const double sd = std::sqrt(p * (1 - p) / draws);
        if (std::abs(freq - p) > 3 * sd + 1e-12) ++outside;
      }
    EXPECT_LE(static_cast<double>(outside), 0.01 * static_cast<double>(pairs));
  }
}
