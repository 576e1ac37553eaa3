#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace inforank {

using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;

// Binary graph without self-loops. Undirected edges are stored once as
// (min, max); adjacency queries are symmetric. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges are dropped. Throws RejectedEdgeError on self-loops and
  // InputError on out-of-range endpoints or a label list of the wrong size.
  Graph(std::size_t n, bool directed, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  bool directed() const { return directed_; }
  std::size_t num_edges() const { return edges_.size(); }

  // Sorted (source, target) pairs; (min, max) when undirected.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(NodeId from, NodeId to) const;

  // Sorted neighbour lists. For undirected graphs both return the same list.
  std::span<const NodeId> out_neighbors(NodeId v) const { return out_[v]; }
  std::span<const NodeId> in_neighbors(NodeId v) const {
    return directed_ ? std::span<const NodeId>(in_[v]) : std::span<const NodeId>(out_[v]);
  }
  std::size_t out_degree(NodeId v) const { return out_[v].size(); }
  std::size_t in_degree(NodeId v) const { return in_neighbors(v).size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId v) const { return labels_[v]; }
  std::optional<NodeId> find(const std::string& label) const;

  // Copy with one extra node of degree zero appended at index size().
  Graph with_isolated_node(std::string label) const;

  // Copy where old node v becomes perm[v]. Labels travel with their nodes.
  Graph permuted(std::span<const NodeId> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::vector<std::string> labels_;
};

/// Degree bookkeeping. Undirected graphs fill `k`; directed graphs fill
/// `k_out`/`k_in` and also `k` with the total degree k_out + k_in.
struct DegreeSeq {
  bool directed = false;
  std::vector<std::size_t> k;
  std::vector<std::size_t> k_out;
  std::vector<std::size_t> k_in;
  std::size_t links = 0;

  std::size_t size() const { return k.size(); }

  static DegreeSeq undirected(std::vector<std::size_t> k);
  static DegreeSeq directed_seq(std::vector<std::size_t> k_out, std::vector<std::size_t> k_in);
};

DegreeSeq degree_sequence(const Graph& g);

// Optional third column of an edge list. Keys use the graph's edge
// orientation, i.e. (min, max) for undirected graphs.
using EdgeWeights = std::map<Edge, double>;

struct LoadedGraph {
  Graph graph;
  std::optional<EdgeWeights> weights;
};

// Reads `<label><sep><label>[<sep><weight>]` lines; separators are any run of
// whitespace and/or commas, `#` starts a comment line. Labels get dense ids in
// order of first appearance. When a duplicated edge carries weights, the first
// one wins.
LoadedGraph load_edge_list(std::istream& in, bool directed);
LoadedGraph load_edge_list_file(const std::string& path, bool directed);

void write_edge_list(std::ostream& out, const Graph& g, const EdgeWeights* weights = nullptr);

}  // namespace inforank
