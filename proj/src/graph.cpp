#include "inforank/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "inforank/errors.hpp"

namespace inforank {

Graph::Graph(std::size_t n, bool directed, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : n_(n), directed_(directed), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != n_) {
    throw InputError("label count " + std::to_string(labels_.size()) +
                     " does not match node count " + std::to_string(n_));
  }

  for (auto& [u, v] : edges) {
    if (u >= n_ || v >= n_) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n_));
    }
    if (u == v) throw RejectedEdgeError("self-loop on node " + labels_[u]);
    if (!directed_ && u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  out_.assign(n_, {});
  if (directed_) in_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    out_[u].push_back(v);
    if (directed_) {
      in_[v].push_back(u);
    } else {
      out_[v].push_back(u);
    }
  }
  for (auto& adj : out_) std::sort(adj.begin(), adj.end());
  for (auto& adj : in_) std::sort(adj.begin(), adj.end());
}

bool Graph::has_edge(NodeId from, NodeId to) const {
  if (from >= n_ || to >= n_) return false;
  const auto& adj = out_[from];
  return std::binary_search(adj.begin(), adj.end(), to);
}

std::optional<NodeId> Graph::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

Graph Graph::with_isolated_node(std::string label) const {
  auto labels = labels_;
  labels.push_back(std::move(label));
  return Graph(n_ + 1, directed_, edges_, std::move(labels));
}

Graph Graph::permuted(std::span<const NodeId> perm) const {
  if (perm.size() != n_) throw InputError("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& [u, v] : edges_) edges.emplace_back(perm[u], perm[v]);
  std::vector<std::string> labels(n_);
  for (std::size_t i = 0; i < n_; ++i) labels[perm[i]] = labels_[i];
  return Graph(n_, directed_, std::move(edges), std::move(labels));
}

DegreeSeq DegreeSeq::undirected(std::vector<std::size_t> k) {
  DegreeSeq d;
  d.directed = false;
  std::size_t total = 0;
  for (auto ki : k) total += ki;
  d.links = total / 2;
  d.k = std::move(k);
  return d;
}

DegreeSeq DegreeSeq::directed_seq(std::vector<std::size_t> k_out, std::vector<std::size_t> k_in) {
  if (k_out.size() != k_in.size()) throw InputError("out/in degree vectors differ in length");
  DegreeSeq d;
  d.directed = true;
  d.k.resize(k_out.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < k_out.size(); ++i) {
    d.k[i] = k_out[i] + k_in[i];
    total += k_out[i];
  }
  d.links = total;
  d.k_out = std::move(k_out);
  d.k_in = std::move(k_in);
  return d;
}

DegreeSeq degree_sequence(const Graph& g) {
  const auto n = g.size();
  if (!g.directed()) {
    std::vector<std::size_t> k(n);
    for (NodeId i = 0; i < n; ++i) k[i] = g.out_degree(i);
    return DegreeSeq::undirected(std::move(k));
  }
  std::vector<std::size_t> kout(n), kin(n);
  for (NodeId i = 0; i < n; ++i) {
    kout[i] = g.out_degree(i);
    kin[i] = g.in_degree(i);
  }
  return DegreeSeq::directed_seq(std::move(kout), std::move(kin));
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

double parse_weight(std::string_view text, std::size_t line_no) {
  // std::from_chars for double is available in libstdc++ 11.
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError("invalid weight '" + std::string(text) + "'", line_no);
  }
  return value;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, bool directed) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  EdgeWeights weights;
  bool weighted = false;

  auto intern = [&](std::string_view label) {
    auto [it, inserted] = ids.try_emplace(std::string(label), labels.size());
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError("expected 2 or 3 fields, found " + std::to_string(fields.size()), line_no);
    }
    if (fields[0] == fields[1]) {
      throw RejectedEdgeError("self-loop on '" + std::string(fields[0]) + "'", line_no);
    }
    std::optional<double> w;
    if (fields.size() == 3) w = parse_weight(fields[2], line_no);

    NodeId u = intern(fields[0]);
    NodeId v = intern(fields[1]);
    edges.emplace_back(u, v);
    if (w) {
      weighted = true;
      Edge key = directed ? Edge{u, v} : Edge{std::min(u, v), std::max(u, v)};
      weights.try_emplace(key, *w);
    }
  }
  if (edges.empty()) throw EmptyGraphError();

  const std::size_t n = labels.size();
  LoadedGraph result{Graph(n, directed, std::move(edges), std::move(labels)),
                     std::nullopt};
  if (weighted) result.weights = std::move(weights);
  return result;
}

LoadedGraph load_edge_list_file(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_edge_list(in, directed);
}

void write_edge_list(std::ostream& out, const Graph& g, const EdgeWeights* weights) {
  for (const auto& e : g.edges()) {
    out << g.label(e.first) << ' ' << g.label(e.second);
    if (weights) {
      auto it = weights->find(e);
      if (it != weights->end()) {
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof(buf), it->second);
        out << ' ' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
      }
    }
    out << '\n';
  }
}

}  // namespace inforank
