#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "inforank/errors.hpp"
#include "inforank/generators.hpp"
#include "inforank/graph.hpp"
#include "inforank/random.hpp"

using namespace inforank;

namespace {

LoadedGraph parse(const std::string& text, bool directed) {
  std::istringstream in(text);
  return load_edge_list(in, directed);
}

std::set<std::pair<std::string, std::string>> labeled_edges(const Graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [u, v] : g.edges()) {
    auto a = g.label(u), b = g.label(v);
    if (!g.directed() && b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

}  // namespace

TEST(GraphLoad, TriangleUndirected) {
  auto loaded = parse("a b\nb c\nc a\n", false);
  const Graph& g = loaded.graph;
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  auto k = degree_sequence(g);
  EXPECT_EQ(k.k, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(k.links, 3u);
  EXPECT_FALSE(loaded.weights.has_value());
}

TEST(GraphLoad, DirectedPairKeepsOrientation) {
  auto g = parse("a b\n", true).graph;
  auto k = degree_sequence(g);
  EXPECT_EQ(k.k_out, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(k.k_in, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(1, 0));
}

TEST(GraphLoad, CommentsCommasAndWeights) {
  auto loaded = parse("# header\na,b,2.5\n\n b  c \t 1e-1\n", true);
  ASSERT_TRUE(loaded.weights.has_value());
  EXPECT_DOUBLE_EQ(loaded.weights->at({0, 1}), 2.5);
  EXPECT_DOUBLE_EQ(loaded.weights->at({1, 2}), 0.1);
}

TEST(GraphLoad, DuplicateEdgesCollapse) {
  auto g = parse("a b\nb a\na b\n", false).graph;
  EXPECT_EQ(g.num_edges(), 1u);
  auto d = parse("a b\nb a\na b\n", true).graph;
  EXPECT_EQ(d.num_edges(), 2u);
}

TEST(GraphLoad, EmptyInputIsRejected) {
  EXPECT_THROW(parse("", false), EmptyGraphError);
  EXPECT_THROW(parse("# only a comment\n\n", false), EmptyGraphError);
}

TEST(GraphLoad, SelfLoopIsRejectedWithLine) {
  try {
    parse("a b\nc c\n", false);
    FAIL() << "expected RejectedEdgeError";
  } catch (const RejectedEdgeError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(GraphLoad, MalformedLinesCarryLineNumbers) {
  try {
    parse("a b\nb\n", false);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse("a b c d\n", false), ParseError);
  EXPECT_THROW(parse("a b x1\n", false), ParseError);
}

TEST(GraphLoad, MissingFileIsAnError) {
  EXPECT_THROW(load_edge_list_file("/nonexistent/inforank/edges.txt", false), Error);
}

TEST(GraphConstruct, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, false, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(3, false, {{1, 1}}), RejectedEdgeError);
  EXPECT_THROW(Graph(2, false, {{0, 1}}, {"only-one"}), InputError);
}

TEST(GraphConstruct, IsolatedNodeAndPermutation) {
  Graph g(3, true, {{0, 1}, {1, 2}});
  Graph h = g.with_isolated_node("z");
  EXPECT_EQ(h.size(), 4u);
  EXPECT_EQ(h.label(3), "z");
  EXPECT_EQ(h.out_degree(3), 0u);
  EXPECT_EQ(h.in_degree(3), 0u);

  std::vector<NodeId> perm{2, 0, 1};
  Graph p = g.permuted(perm);
  EXPECT_TRUE(p.has_edge(2, 0));
  EXPECT_TRUE(p.has_edge(0, 1));
  EXPECT_EQ(p.label(2), "0");
}

TEST(GraphRoundTrip, RandomGraphsSurviveWriteAndRead) {
  for (bool directed : {false, true}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Graph g = erdos_renyi(30, 0.15, directed, seed);
      if (g.num_edges() == 0) continue;
      EdgeWeights w;
      Rng rng(seed);
      for (const auto& e : g.edges()) w[e] = 0.1 + uniform01(rng);
      std::stringstream buf;
      write_edge_list(buf, g, &w);
      auto back = load_edge_list(buf, directed);
      EXPECT_EQ(labeled_edges(back.graph), labeled_edges(g));
      ASSERT_TRUE(back.weights.has_value());
      for (const auto& [e, weight] : *back.weights) {
        NodeId u = std::stoul(back.graph.label(e.first));
        NodeId v = std::stoul(back.graph.label(e.second));
        if (!directed && u > v) std::swap(u, v);
        EXPECT_EQ(weight, w.at({u, v}));
      }
    }
  }
}

TEST(GraphDegrees, SumsMatchLinkCount) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (bool directed : {false, true}) {
      Graph g = barabasi_albert(60, 2, directed, seed);
      auto k = degree_sequence(g);
      std::size_t total = std::accumulate(k.k.begin(), k.k.end(), std::size_t{0});
      EXPECT_EQ(total, 2 * g.num_edges());
      if (directed) {
        EXPECT_EQ(std::accumulate(k.k_out.begin(), k.k_out.end(), std::size_t{0}), g.num_edges());
        EXPECT_EQ(std::accumulate(k.k_in.begin(), k.k_in.end(), std::size_t{0}), g.num_edges());
      }
    }
  }
}

TEST(Generators, Shapes) {
  Graph s = star(5, false);
  EXPECT_EQ(s.num_edges(), 4u);
  EXPECT_EQ(s.out_degree(0), 4u);
  Graph sd = star(5, true);
  EXPECT_EQ(sd.out_degree(0), 4u);
  EXPECT_EQ(sd.in_degree(0), 0u);

  Graph r = ring_lattice(10, 2);
  for (NodeId v = 0; v < 10; ++v) EXPECT_EQ(r.out_degree(v), 4u);

  Graph ba = barabasi_albert(100, 2, false, 7);
  EXPECT_EQ(ba.num_edges(), 3u + 2u * 97u);

  EXPECT_EQ(erdos_renyi(20, 0.0, false, 1).num_edges(), 0u);
  EXPECT_EQ(erdos_renyi(20, 1.0, false, 1).num_edges(), 190u);
  EXPECT_EQ(erdos_renyi(20, 1.0, true, 1).num_edges(), 380u);
}

TEST(Generators, SeedsAreReproducible) {
  EXPECT_EQ(erdos_renyi(50, 0.1, true, 42), erdos_renyi(50, 0.1, true, 42));
  EXPECT_EQ(barabasi_albert(50, 3, true, 42), barabasi_albert(50, 3, true, 42));
  EXPECT_FALSE(erdos_renyi(50, 0.1, true, 42) == erdos_renyi(50, 0.1, true, 43));
}

TEST(Generators, SpecStrings) {
  EXPECT_EQ(generate("star:7", false, 0).size(), 7u);
  EXPECT_EQ(generate("ba:40,2", true, 3), barabasi_albert(40, 2, true, 3));
  EXPECT_EQ(generate("er:40,0.2", false, 3), erdos_renyi(40, 0.2, false, 3));
  EXPECT_EQ(generate("ring:12,1", false, 0).num_edges(), 12u);
  EXPECT_THROW(generate("bogus:1", false, 0), InputError);
  EXPECT_THROW(generate("er:10", false, 0), InputError);
  EXPECT_THROW(generate("er:10,1.5", false, 0), InputError);
}
