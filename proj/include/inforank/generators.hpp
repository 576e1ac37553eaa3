#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "inforank/graph.hpp"

namespace inforank {

// Erdős–Rényi G(n, p). Directed graphs draw every ordered pair independently.
Graph erdos_renyi(std::size_t n, double p, bool directed, std::uint64_t seed);

// Barabási–Albert preferential attachment, seeded with a clique on m+1 nodes.
// In the directed variant each new link points away from or towards the new
// node with equal probability, and attachment weights use total degree.
Graph barabasi_albert(std::size_t n, std::size_t m, bool directed, std::uint64_t seed);

// Node 0 is the centre. Directed stars point outwards.
Graph star(std::size_t n, bool directed);

// Ring lattice: node i linked to its k nearest neighbours on each side.
Graph ring_lattice(std::size_t n, std::size_t k);

// Parses "er:n,p", "ba:n,m", "star:n" or "ring:n,k".
Graph generate(const std::string& spec, bool directed, std::uint64_t seed);

}  // namespace inforank
