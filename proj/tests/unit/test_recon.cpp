#include <gtest/gtest.h>

#include <cmath>

#include "inforank/errors.hpp"
#include "inforank/generators.hpp"
#include "inforank/random.hpp"
#include "inforank/recon.hpp"

using namespace inforank;

namespace {

double accuracy_oracle(const ProbMatrix& P, const Graph& g) {
  const std::size_t n = g.size();
  double tp = 0.0, tn = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool a = g.directed() ? g.has_edge(i, j) : g.has_edge(std::min(i, j), std::max(i, j));
      if (a)
        tp += P(i, j);
      else
        tn += 1.0 - P(i, j);
    }
  return (tp + tn) / static_cast<double>(n * (n - 1));
}

// Textbook two-pass formula.
double pearson_oracle(const std::vector<double>& x, const std::vector<double>& y) {
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

}  // namespace

TEST(ExpectedAccuracy, DeterministicMatrixIsPerfect) {
  Graph g(3, true, {{0, 1}, {1, 2}});
  ProbMatrix P(3, true);
  P.set(0, 1, 1.0);
  P.set(1, 2, 1.0);
  EXPECT_EQ(expected_accuracy(P, g), 1.0);
}

TEST(ExpectedAccuracy, MatchesOracleOnBenchmarks) {
  for (bool directed : {false, true}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      Graph g = erdos_renyi(40, 0.1, directed, seed);
      const auto P = solve_benchmark(g).probs;
      EXPECT_NEAR(expected_accuracy(P, g), accuracy_oracle(P, g), 1e-12);
    }
  }
}

TEST(ExpectedAccuracy, SizeMismatchIsInputError) {
  Graph g(3, false, {{0, 1}});
  EXPECT_THROW(expected_accuracy(ProbMatrix(4, false), g), InputError);
  EXPECT_THROW(expected_accuracy(ProbMatrix(3, true), g), InputError);
}

TEST(NodeAccuracy, ConditioningNeverHurts) {
  for (bool directed : {false, true}) {
    Graph g = barabasi_albert(40, 2, directed, 3);
    const double base = expected_accuracy(solve_benchmark(g).probs, g);
    for (NodeId v = 0; v < 40; v += 7) EXPECT_GE(node_accuracy(g, v), base - 1e-9);
  }
}

TEST(NodeAccuracy, DeterministicRemainderIsPerfect) {
  Graph p4(4, false, {{0, 1}, {1, 2}, {2, 3}});
  for (NodeId v = 0; v < 4; ++v) EXPECT_NEAR(node_accuracy(p4, v), 1.0, 1e-12);
  EXPECT_EQ(node_accuracy(star(6, false), 0), 1.0);
}

TEST(Pearson, MatchesTwoPassOracle) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(10 + trial), y(10 + trial);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = uniform01(rng);
      y[i] = 0.3 * x[i] + uniform01(rng);
    }
    EXPECT_NEAR(pearson(x, y), pearson_oracle(x, y), 1e-12);
  }
}

TEST(Pearson, PerfectAndAnti) {
  std::vector<double> x{1, 2, 3, 4}, y{2, 4, 6, 8}, z{4, 3, 2, 1};
  EXPECT_NEAR(pearson(x, y), 1.0, 1e-15);
  EXPECT_NEAR(pearson(x, z), -1.0, 1e-15);
}

TEST(Pearson, DegenerateInputs) {
  std::vector<double> x{1, 2, 3}, flat{2, 2, 2}, shorter{1, 2};
  EXPECT_THROW(pearson(x, flat), UndefinedCorrelationError);
  EXPECT_THROW(pearson(flat, x), UndefinedCorrelationError);
  EXPECT_THROW(pearson(x, shorter), InputError);
  std::vector<double> one{1};
  EXPECT_THROW(pearson(one, one), UndefinedCorrelationError);
}

TEST(AccuracyReport, RegularGraphFlagsDegenerateCorrelations) {
  Graph ring = ring_lattice(12, 2);
  std::vector<RankVector> ranks{degree_centrality(ring), closeness_centrality(ring), pagerank(ring)};
  const auto rep = accuracy_report(ring, ranks);
  ASSERT_EQ(rep.correlations.size(), 3u);
  for (const auto& c : rep.correlations) {
    EXPECT_FALSE(c.r.has_value()) << c.index_name;
    EXPECT_TRUE(c.error.has_value());
  }
}

TEST(AccuracyReport, ScaleFreeAccuracyTracksInfoRank) {
  Graph g = barabasi_albert(100, 2, false, 1);
  const auto rep_i = inforank::inforank(g);
  std::vector<RankVector> ranks{RankVector::make("inforank", rep_i.I)};
  const auto rep = accuracy_report(g, ranks);
  ASSERT_TRUE(rep.correlations[0].r.has_value());
  EXPECT_GE(*rep.correlations[0].r, 0.9);
  for (double a : rep.accuracy) EXPECT_GE(a, rep.benchmark_accuracy - 1e-9);
}

TEST(AccuracyReport, WrongLengthRankIsReportedNotThrown) {
  Graph g = erdos_renyi(10, 0.3, false, 1);
  std::vector<RankVector> ranks{RankVector::make("short", {1.0, 2.0})};
  const auto rep = accuracy_report(g, ranks);
  EXPECT_FALSE(rep.correlations[0].r.has_value());
  EXPECT_TRUE(rep.correlations[0].error.has_value());
}
