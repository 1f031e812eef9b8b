#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lgp {

using Vertex = std::uint32_t;
using LabelId = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Structural problem with a graph or pattern. `field()` names the record
/// field at fault so parse errors can point at it.
class GraphError : public std::invalid_argument {
 public:
  enum class Kind { endpoint_out_of_range, self_loop, duplicate_edge, label_count, root_out_of_range, disconnected, label_mismatch };

  GraphError(Kind kind, std::string field, const std::string& what)
      : std::invalid_argument(what), kind_(kind), field_(std::move(field)) {}

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  Kind kind_;
  std::string field_;
};

/// Interns external label strings to dense ids. The label "0" always has
/// id 0, which is the uniform label of unlabeled graphs.
class LabelAlphabet {
 public:
  LabelAlphabet() { intern("0"); }

  LabelId intern(std::string_view name);
  [[nodiscard]] const std::string& name(LabelId id) const { return names_.at(id); }
  [[nodiscard]] bool contains(std::string_view name) const { return ids_.contains(std::string(name)); }
  [[nodiscard]] std::size_t size() const { return names_.size(); }

 private:
  std::unordered_map<std::string, LabelId> ids_;
  std::vector<std::string> names_;
};

/// Undirected vertex-labelled simple graph with dense vertex ids.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Validates and normalizes: edges are stored with u < v and sorted,
  /// neighbor lists are sorted. Throws GraphError on a self-loop, duplicate
  /// edge, out-of-range endpoint, or a label vector of the wrong length.
  /// An empty `labels` means every vertex carries label 0.
  Graph(std::string id, std::size_t n, std::vector<LabelId> labels, std::vector<Edge> edges);

  [[nodiscard]] const std::string& id() const { return id_; }
  [[nodiscard]] std::size_t n() const { return labels_.size(); }
  [[nodiscard]] std::size_t m() const { return edges_.size(); }
  [[nodiscard]] LabelId label(Vertex v) const { return labels_[v]; }
  [[nodiscard]] const std::vector<LabelId>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

  [[nodiscard]] bool is_connected() const;
  /// Component index per vertex, components numbered by smallest member.
  [[nodiscard]] std::vector<std::size_t> components() const;

  /// Same graph with a different id.
  [[nodiscard]] Graph renamed(std::string id) const;
  /// Vertex v of this graph becomes perm[v].
  [[nodiscard]] Graph permuted(std::span<const Vertex> perm) const;
  /// Subgraph induced by `keep` (in the given order).
  [[nodiscard]] Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::string id_;
  std::vector<LabelId> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

/// Disjoint union; vertices of `b` are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b, std::string id);

/// Connected graph with a distinguished root vertex.
class RootedPattern {
 public:
  RootedPattern() = default;
  /// Throws GraphError if the root is out of range or the graph is disconnected.
  RootedPattern(Graph graph, Vertex root);

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] Vertex root() const { return root_; }
  [[nodiscard]] const std::string& id() const { return graph_.id(); }
  [[nodiscard]] std::size_t n() const { return graph_.n(); }
  [[nodiscard]] LabelId root_label() const { return graph_.label(root_); }

  [[nodiscard]] RootedPattern renamed(std::string id) const { return {graph_.renamed(std::move(id)), root_}; }

  friend bool operator==(const RootedPattern&, const RootedPattern&) = default;

 private:
  Graph graph_;
  Vertex root_ = 0;
};

// Small named graphs, uniformly labelled unless a label is given.
namespace shapes {
Graph cycle(std::size_t len, LabelId label = 0);
Graph path(std::size_t vertices, LabelId label = 0);
Graph clique(std::size_t k, LabelId label = 0);
Graph star(std::size_t leaves, LabelId label = 0);
Graph single_vertex(LabelId label = 0);

RootedPattern rooted_cycle(std::size_t len);
RootedPattern rooted_clique(std::size_t k);
/// Path with `len` edges rooted at an end; L1 is the single edge.
RootedPattern rooted_path(std::size_t len);
}  // namespace shapes

}  // namespace lgp
