#include "inforank/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "inforank/errors.hpp"
#include "inforank/random.hpp"

namespace inforank {

Graph erdos_renyi(std::size_t n, double p, bool directed, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw InputError("ER probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = directed ? 0 : i + 1; j < n; ++j) {
      if (i == j) continue;
      if (uniform01(rng) < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, directed, std::move(edges));
}

Graph barabasi_albert(std::size_t n, std::size_t m, bool directed, std::uint64_t seed) {
  if (m == 0 || n <= m) throw InputError("BA generator needs 1 <= m < n");
  Rng rng(seed);
  std::vector<Edge> edges;
  // Every endpoint appears once per incident link, so a uniform pick from
  // this list is a degree-proportional pick.
  std::vector<NodeId> endpoints;

  auto add = [&](NodeId a, NodeId b) {
    if (directed && uniform01(rng) < 0.5) std::swap(a, b);
    edges.emplace_back(a, b);
    endpoints.push_back(a);
    endpoints.push_back(b);
  };

  for (NodeId i = 0; i <= m; ++i) {
    for (NodeId j = i + 1; j <= m; ++j) add(i, j);
  }
  std::vector<NodeId> targets;
  for (NodeId v = m + 1; v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      auto pick = endpoints[uniform_index(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
    }
    for (auto t : targets) add(v, t);
  }
  return Graph(n, directed, std::move(edges));
}

Graph star(std::size_t n, bool directed) {
  if (n < 2) throw InputError("star needs at least 2 nodes");
  std::vector<Edge> edges;
  for (NodeId leaf = 1; leaf < n; ++leaf) edges.emplace_back(0, leaf);
  return Graph(n, directed, std::move(edges));
}

Graph ring_lattice(std::size_t n, std::size_t k) {
  if (2 * k >= n) throw InputError("ring lattice needs 2k < n");
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (std::size_t d = 1; d <= k; ++d) edges.emplace_back(i, (i + d) % n);
  }
  return Graph(n, false, std::move(edges));
}

Graph generate(const std::string& spec, bool directed, std::uint64_t seed) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("generator spec must look like kind:args");
  const std::string kind = spec.substr(0, colon);
  std::vector<std::string> args;
  {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) args.push_back(item);
  }
  auto arg_count = [&](std::size_t expected) {
    if (args.size() != expected) {
      throw InputError("generator '" + kind + "' expects " + std::to_string(expected) + " argument(s)");
    }
  };
  try {
    if (kind == "er") {
      arg_count(2);
      return erdos_renyi(std::stoul(args[0]), std::stod(args[1]), directed, seed);
    }
    if (kind == "ba") {
      arg_count(2);
      return barabasi_albert(std::stoul(args[0]), std::stoul(args[1]), directed, seed);
    }
    if (kind == "star") {
      arg_count(1);
      return star(std::stoul(args[0]), directed);
    }
    if (kind == "ring") {
      arg_count(2);
      if (directed) throw InputError("ring lattices are undirected");
      return ring_lattice(std::stoul(args[0]), std::stoul(args[1]));
    }
  } catch (const std::logic_error&) {
    throw InputError("bad numeric argument in generator spec '" + spec + "'");
  }
  throw InputError("unknown generator '" + kind + "'");
}

}  // namespace inforank
