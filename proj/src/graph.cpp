#include "lgp/graph.hpp"

#include <algorithm>
#include <numeric>

namespace lgp {

LabelId LabelAlphabet::intern(std::string_view name) {
  auto [it, inserted] = ids_.try_emplace(std::string(name), static_cast<LabelId>(names_.size()));
  if (inserted) names_.emplace_back(name);
  return it->second;
}

Graph::Graph(std::string id, std::size_t n, std::vector<LabelId> labels, std::vector<Edge> edges)
    : id_(std::move(id)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_.assign(n, 0);
  if (labels_.size() != n)
    throw GraphError(GraphError::Kind::label_count, "labels",
                     "expected " + std::to_string(n) + " labels, got " + std::to_string(labels_.size()));
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw GraphError(GraphError::Kind::endpoint_out_of_range, "edges",
                       "edge [" + std::to_string(u) + "," + std::to_string(v) + "] has an endpoint outside [0," +
                           std::to_string(n) + ")");
    if (u == v) throw GraphError(GraphError::Kind::self_loop, "edges", "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw GraphError(GraphError::Kind::duplicate_edge, "edges",
                     "duplicate edge [" + std::to_string(dup->first) + "," + std::to_string(dup->second) + "]");
  edges_ = std::move(edges);

  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::size_t> Graph::components() const {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n(), unset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n(); ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : neighbors(u))
        if (comp[w] == unset) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

bool Graph::is_connected() const {
  auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

Graph Graph::renamed(std::string id) const {
  Graph g = *this;
  g.id_ = std::move(id);
  return g;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  std::vector<LabelId> labels(n());
  for (Vertex v = 0; v < n(); ++v) labels[perm[v]] = labels_[v];
  std::vector<Edge> edges;
  edges.reserve(m());
  for (auto [u, v] : edges_) edges.emplace_back(perm[u], perm[v]);
  return {id_, n(), std::move(labels), std::move(edges)};
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> pos(n(), static_cast<Vertex>(-1));
  std::vector<LabelId> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    pos[keep[i]] = static_cast<Vertex>(i);
    labels.push_back(labels_[keep[i]]);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : edges_)
    if (pos[u] != static_cast<Vertex>(-1) && pos[v] != static_cast<Vertex>(-1)) edges.emplace_back(pos[u], pos[v]);
  return {id_, keep.size(), std::move(labels), std::move(edges)};
}

Graph disjoint_union(const Graph& a, const Graph& b, std::string id) {
  std::vector<LabelId> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<Edge> edges = a.edges();
  auto shift = static_cast<Vertex>(a.n());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return {std::move(id), a.n() + b.n(), std::move(labels), std::move(edges)};
}

RootedPattern::RootedPattern(Graph graph, Vertex root) : graph_(std::move(graph)), root_(root) {
  if (root_ >= graph_.n())
    throw GraphError(GraphError::Kind::root_out_of_range, "root",
                     "root " + std::to_string(root_) + " outside [0," + std::to_string(graph_.n()) + ")");
  if (!graph_.is_connected())
    throw GraphError(GraphError::Kind::disconnected, "edges", "pattern '" + graph_.id() + "' is disconnected");
}

namespace shapes {

Graph cycle(std::size_t len, LabelId label) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < len; ++i) e.emplace_back(i, (i + 1) % len);
  return {"C" + std::to_string(len), len, std::vector<LabelId>(len, label), std::move(e)};
}

Graph path(std::size_t vertices, LabelId label) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < vertices; ++i) e.emplace_back(i, i + 1);
  return {"P" + std::to_string(vertices), vertices, std::vector<LabelId>(vertices, label), std::move(e)};
}

Graph clique(std::size_t k, LabelId label) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return {"K" + std::to_string(k), k, std::vector<LabelId>(k, label), std::move(e)};
}

Graph star(std::size_t leaves, LabelId label) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return {"S" + std::to_string(leaves), leaves + 1, std::vector<LabelId>(leaves + 1, label), std::move(e)};
}

Graph single_vertex(LabelId label) { return {"K1", 1, {label}, {}}; }

RootedPattern rooted_cycle(std::size_t len) { return {cycle(len), 0}; }
RootedPattern rooted_clique(std::size_t k) { return {clique(k), 0}; }
RootedPattern rooted_path(std::size_t len) { return {path(len + 1).renamed("L" + std::to_string(len)), 0}; }

}  // namespace shapes
}  // namespace lgp
