#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numeric>

#include "inforank/centrality.hpp"
#include "inforank/errors.hpp"
#include "inforank/generators.hpp"
#include "inforank/random.hpp"

using namespace inforank;

namespace {

// Perron vector of G = (1-a)/N 11^T + a M, M_ij = a_ji / k_j^out, scaled to
// sum 1. Dangling columns of M stay zero.
std::vector<double> pagerank_oracle(const Graph& g, double alpha) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd G = Eigen::MatrixXd::Constant(n, n, (1.0 - alpha) / static_cast<double>(n));
  for (NodeId j = 0; j < g.size(); ++j) {
    const auto kout = static_cast<double>(g.out_degree(j));
    for (NodeId i : g.out_neighbors(j)) G(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += alpha / kout;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(G);
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < n; ++k)
    if (es.eigenvalues()[k].real() > es.eigenvalues()[best].real()) best = k;
  Eigen::VectorXd v = es.eigenvectors().col(best).real();
  v /= v.sum();
  return {v.data(), v.data() + v.size()};
}

std::vector<double> closeness_oracle(const Graph& g) {
  const std::size_t n = g.size();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::size_t> d(n * n, inf);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  for (const auto& [u, v] : g.edges()) {
    d[u * n + v] = 1;
    if (!g.directed()) d[v * n + u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  std::vector<double> c(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t reach = 0, total = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && d[i * n + j] < inf) {
        ++reach;
        total += d[i * n + j];
      }
    c[i] = reach ? static_cast<double>(reach) / static_cast<double>(total) : 0.0;
  }
  return c;
}

}  // namespace

TEST(Rescale, Examples) {
  std::vector<double> a{1, 2, 3};
  EXPECT_EQ(rescale(a), (std::vector<double>{0, 0.5, 1}));
  std::vector<double> flat{5, 5, 5};
  EXPECT_EQ(rescale(flat), (std::vector<double>{0, 0, 0}));
  std::vector<double> empty;
  EXPECT_THROW(rescale(empty), InputError);
}

TEST(Rescale, NaNEntriesAreSkipped) {
  std::vector<double> v{2, std::nan(""), 4};
  const auto r = rescale(v);
  EXPECT_EQ(r[0], 0.0);
  EXPECT_TRUE(std::isnan(r[1]));
  EXPECT_EQ(r[2], 1.0);
}

TEST(Rescale, AffineAndOrderPreserving) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(2 + trial % 30);
    for (double& x : v) x = 100.0 * uniform01(rng) - 50.0;
    const auto r = rescale(v);
    const double lo = *std::min_element(v.begin(), v.end());
    const double hi = *std::max_element(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_NEAR(r[i], (v[i] - lo) / (hi - lo), 1e-12);
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[i] < v[j]) EXPECT_LE(r[i], r[j]);
    }
  }
}

TEST(Degree, UsesOutDegree) {
  Graph g(3, true, {{0, 1}, {0, 2}, {1, 2}});
  const auto d = degree_centrality(g);
  EXPECT_EQ(d.name, "degree");
  EXPECT_EQ(d.scores, (std::vector<double>{2, 1, 0}));
  EXPECT_EQ(d.rescaled, (std::vector<double>{1, 0.5, 0}));
}

TEST(PageRank, PureTeleportIsUniformExactly) {
  PageRankOptions o;
  o.alpha = 0.0;
  const auto p = pagerank(barabasi_albert(37, 2, true, 1), o);
  for (double v : p.scores) EXPECT_EQ(v, 1.0 / 37.0);
}

TEST(PageRank, ReciprocatedPairIsHalf) {
  const auto p = pagerank(Graph(2, true, {{0, 1}, {1, 0}}));
  EXPECT_NEAR(p.scores[0], 0.5, 1e-15);
  EXPECT_NEAR(p.scores[1], 0.5, 1e-15);
}

TEST(PageRank, MatchesDenseOracle) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    for (double alpha : {0.5, 0.85}) {
      const std::size_t n = 5 + (seed * 7) % 46;
      Graph g = seed % 3 ? erdos_renyi(n, 0.1, true, seed) : barabasi_albert(n, 2, seed % 2 == 0, seed);
      PageRankOptions o;
      o.alpha = alpha;
      const auto p = pagerank(g, o);
      const auto oracle = pagerank_oracle(g, alpha);
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_NEAR(p.scores[i], oracle[i], 1e-10) << "seed " << seed << " n " << n;
        sum += p.scores[i];
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(PageRank, DanglingNodesOnlyTeleport) {
  // 0 -> 1, 1 has no out-links.
  Graph g(2, true, {{0, 1}});
  const auto p = pagerank(g);
  const auto oracle = pagerank_oracle(g, 0.85);
  EXPECT_NEAR(p.scores[0], oracle[0], 1e-12);
  EXPECT_NEAR(p.scores[1], oracle[1], 1e-12);
  EXPECT_GT(p.scores[1], p.scores[0]);
}

TEST(PageRank, RejectsBadDamping) {
  PageRankOptions o;
  o.alpha = 1.0;
  EXPECT_THROW(pagerank(star(4, true), o), InputError);
  o.alpha = -0.1;
  EXPECT_THROW(pagerank(star(4, true), o), InputError);
}

TEST(PageRank, NonConvergenceIsReported) {
  PageRankOptions o;
  o.max_iterations = 1;
  EXPECT_THROW(pagerank(barabasi_albert(40, 2, true, 1), o), SolverError);
}

TEST(Closeness, MatchesAllPairsOracle) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    for (bool directed : {false, true}) {
      const std::size_t n = 25 * seed;
      Graph g = seed % 2 ? erdos_renyi(n, 2.0 / n, directed, seed) : barabasi_albert(n, 1, directed, seed);
      const auto c = closeness_centrality(g, 3);
      EXPECT_EQ(c.scores, closeness_oracle(g)) << "seed " << seed;
    }
  }
}

TEST(Closeness, ZeroOutDegreeScoresZero) {
  const auto c = closeness_centrality(star(5, true));
  EXPECT_EQ(c.scores[0], 1.0);
  for (std::size_t i = 1; i < 5; ++i) EXPECT_EQ(c.scores[i], 0.0);
}

TEST(Closeness, PathValues) {
  Graph p4(4, false, {{0, 1}, {1, 2}, {2, 3}});
  const auto c = closeness_centrality(p4);
  EXPECT_DOUBLE_EQ(c.scores[0], 3.0 / 6.0);
  EXPECT_DOUBLE_EQ(c.scores[1], 3.0 / 4.0);
}
