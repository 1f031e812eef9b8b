#include "lgp/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "lgp/errors.hpp"

namespace lgp {

std::vector<std::pair<std::size_t, std::size_t>> TreeDecomposition::tree_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (parent[i] != npos_node) out.emplace_back(parent[i], i);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> validate(const Graph& g, const TreeDecomposition& td) {
  const std::size_t k = td.bags.size();
  if (td.parent.size() != k) return "parent vector length differs from bag count";
  if (k == 0) return g.n() == 0 && td.width == -1 ? std::nullopt : std::optional<std::string>("no bags");
  std::size_t roots = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (td.parent[i] == npos_node) {
      ++roots;
    } else if (td.parent[i] >= k) {
      return "parent index out of range at node " + std::to_string(i);
    }
  }
  if (roots != 1) return "expected exactly one root, found " + std::to_string(roots);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t cur = i;
    std::size_t steps = 0;
    while (td.parent[cur] != npos_node) {
      cur = td.parent[cur];
      if (++steps > k) return "parent links contain a cycle";
    }
  }
  int width = -1;
  std::vector<std::vector<bool>> in(k, std::vector<bool>(g.n(), false));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& bag = td.bags[i];
    if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      return "bag " + std::to_string(i) + " is not sorted and duplicate-free";
    for (Vertex v : bag) {
      if (v >= g.n()) return "bag " + std::to_string(i) + " holds out-of-range vertex " + std::to_string(v);
      in[i][v] = true;
    }
    width = std::max(width, static_cast<int>(bag.size()) - 1);
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    std::size_t tops = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (in[i][v] && (td.parent[i] == npos_node || !in[td.parent[i]][v])) ++tops;
    if (tops == 0) return "vertex " + std::to_string(v) + " is in no bag";
    if (tops > 1) return "bags holding vertex " + std::to_string(v) + " are not connected";
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (std::size_t i = 0; i < k && !covered; ++i) covered = in[i][u] && in[i][v];
    if (!covered) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
  }
  if (width != td.width)
    return "width field " + std::to_string(td.width) + " differs from " + std::to_string(width);
  return std::nullopt;
}

nlohmann::json to_json(const TreeDecomposition& td) {
  nlohmann::json tree = nlohmann::json::array();
  for (auto [a, b] : td.tree_edges()) tree.push_back({a, b});
  return {{"bags", td.bags}, {"tree", tree}};
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.n();
  if (order.size() != n) throw std::invalid_argument("elimination order is not a permutation");
  std::vector<std::size_t> pos(n, npos_node);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != npos_node)
      throw std::invalid_argument("elimination order is not a permutation");
    pos[order[i]] = i;
  }
  TreeDecomposition td;
  if (n == 0) return td;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  // Node n-1-i holds the bag created when order[i] is eliminated.
  td.bags.resize(n);
  td.parent.assign(n, npos_node);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    std::vector<Vertex> higher;
    for (Vertex w = 0; w < n; ++w)
      if (adj[v][w] && pos[w] > i) higher.push_back(w);
    for (Vertex a : higher)
      for (Vertex b : higher)
        if (a != b) adj[a][b] = 1;
    std::size_t node = n - 1 - i;
    std::size_t first = npos_node;
    for (Vertex w : higher) first = std::min(first, pos[w]);
    if (first != npos_node) {
      td.parent[node] = n - 1 - first;
    } else if (node != 0) {
      td.parent[node] = 0;
    }
    higher.push_back(v);
    std::sort(higher.begin(), higher.end());
    td.width = std::max(td.width, static_cast<int>(higher.size()) - 1);
    td.bags[node] = std::move(higher);
  }
  return td;
}

TreewidthResult treewidth(const Graph& g) {
  const std::size_t n = g.n();
  if (n > treewidth_vertex_limit)
    throw GuardError("graph '" + g.id() + "' has " + std::to_string(n) +
                     " vertices; exact treewidth is limited to " + std::to_string(treewidth_vertex_limit));
  if (n == 0) return {-1, {}};
  std::vector<std::uint32_t> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= 1u << v;
    nb[v] |= 1u << u;
  }
  // Vertices outside S + v reachable from v through S.
  auto q_size = [&](std::uint32_t s, Vertex v) {
    std::uint32_t seen = 1u << v;
    std::uint32_t frontier = 1u << v;
    std::uint32_t outside = 0;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
      next &= ~seen;
      seen |= next;
      outside |= next & ~s;
      frontier = next & s;
    }
    return std::popcount(outside);
  };
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint8_t> tw(std::size_t{full} + 1, 0);
  std::vector<std::uint8_t> choice(std::size_t{full} + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = 255;
    for (std::uint32_t r = s; r; r &= r - 1) {
      auto v = static_cast<Vertex>(std::countr_zero(r));
      std::uint32_t rest = s & ~(1u << v);
      int val = std::max<int>(tw[rest], q_size(rest, v));
      if (val < best) {
        best = val;
        choice[s] = static_cast<std::uint8_t>(v);
      }
    }
    tw[s] = static_cast<std::uint8_t>(best);
  }
  std::vector<Vertex> order(n);
  std::uint32_t s = full;
  for (std::size_t i = n; i-- > 0;) {
    order[i] = choice[s];
    s &= ~(1u << choice[s]);
  }
  auto td = decomposition_from_order(g, order);
  return {td.width, std::move(td)};
}

TreeDecomposition decompose(const Graph& g) {
  if (g.n() <= treewidth_vertex_limit) return treewidth(g).decomposition;
  const std::size_t n = g.n();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<bool> gone(n, false);
  std::vector<Vertex> order;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    std::size_t best_fill = npos_node;
    std::size_t best_deg = npos_node;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      std::vector<Vertex> nbrs;
      for (Vertex w = 0; w < n; ++w)
        if (!gone[w] && adj[v][w]) nbrs.push_back(w);
      std::size_t fill = 0;
      for (std::size_t a = 0; a < nbrs.size(); ++a)
        for (std::size_t b = a + 1; b < nbrs.size(); ++b)
          if (!adj[nbrs[a]][nbrs[b]]) ++fill;
      if (fill < best_fill || (fill == best_fill && nbrs.size() < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = nbrs.size();
      }
    }
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        if (a != b && !gone[a] && !gone[b] && adj[best][a] && adj[best][b]) adj[a][b] = 1;
    gone[best] = true;
    order.push_back(best);
  }
  return decomposition_from_order(g, order);
}

namespace {

class NiceBuilder {
 public:
  NiceBuilder(const Graph& g, NiceTreeDecomposition& out) : g_(g), out_(out) {}

  std::size_t add(NiceKind kind, Vertex v, std::vector<std::size_t> children, std::vector<Vertex> bag) {
    out_.width = std::max(out_.width, static_cast<int>(bag.size()) - 1);
    out_.nodes.push_back({kind, v, std::move(children), std::move(bag)});
    return out_.nodes.size() - 1;
  }

  // Forgets what the target lacks, then introduces what it adds, each new
  // vertex chosen to have the most neighbours already in the bag.
  std::size_t chain(std::size_t idx, const std::vector<Vertex>& target) {
    std::vector<Vertex> bag = out_.nodes[idx].bag;
    for (Vertex v : std::vector<Vertex>(bag)) {
      if (std::binary_search(target.begin(), target.end(), v)) continue;
      bag.erase(std::find(bag.begin(), bag.end(), v));
      idx = add(NiceKind::forget, v, {idx}, bag);
    }
    std::vector<Vertex> todo;
    for (Vertex v : target)
      if (!std::binary_search(bag.begin(), bag.end(), v)) todo.push_back(v);
    while (!todo.empty()) {
      auto best = todo.begin();
      std::size_t best_links = 0;
      for (auto it = todo.begin(); it != todo.end(); ++it) {
        std::size_t links = 0;
        for (Vertex w : bag) links += g_.adjacent(*it, w) ? 1 : 0;
        if (it == todo.begin() || links > best_links) {
          best = it;
          best_links = links;
        }
      }
      Vertex v = *best;
      todo.erase(best);
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      idx = add(NiceKind::introduce, v, {idx}, bag);
    }
    return idx;
  }

 private:
  const Graph& g_;
  NiceTreeDecomposition& out_;
};

}  // namespace

NiceTreeDecomposition nice_decomposition(const Graph& g, const TreeDecomposition& td, std::optional<Vertex> last) {
  NiceTreeDecomposition out;
  NiceBuilder b(g, out);
  if (td.bags.empty()) {
    b.add(NiceKind::leaf, 0, {}, {});
    return out;
  }
  const std::size_t k = td.bags.size();
  std::vector<std::vector<std::size_t>> tree(k);
  for (auto [p, c] : td.tree_edges()) {
    tree[p].push_back(c);
    tree[c].push_back(p);
  }
  std::size_t root = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (td.parent[i] == npos_node) root = i;
  if (last) {
    for (std::size_t i = 0; i < k; ++i)
      if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), *last)) {
        root = i;
        break;
      }
  }
  std::function<std::size_t(std::size_t, std::size_t)> build = [&](std::size_t t, std::size_t from) {
    std::vector<std::size_t> subs;
    for (std::size_t c : tree[t])
      if (c != from) subs.push_back(b.chain(build(c, t), td.bags[t]));
    if (subs.empty()) return b.chain(b.add(NiceKind::leaf, 0, {}, {}), td.bags[t]);
    std::size_t cur = subs[0];
    for (std::size_t i = 1; i < subs.size(); ++i) cur = b.add(NiceKind::join, 0, {cur, subs[i]}, td.bags[t]);
    return cur;
  };
  std::size_t cur = build(root, npos_node);
  std::vector<Vertex> bag = td.bags[root];
  std::vector<Vertex> drop;
  for (Vertex v : bag)
    if (!last || v != *last) drop.push_back(v);
  if (last && std::binary_search(bag.begin(), bag.end(), *last)) drop.push_back(*last);
  for (Vertex v : drop) {
    bag.erase(std::find(bag.begin(), bag.end(), v));
    cur = b.add(NiceKind::forget, v, {cur}, bag);
  }
  return out;
}

std::optional<std::string> validate(const Graph& g, const NiceTreeDecomposition& ntd) {
  const auto& nodes = ntd.nodes;
  if (nodes.empty()) return "no nodes";
  std::vector<std::size_t> parents(nodes.size(), 0);
  auto where = [](std::size_t i) { return " at node " + std::to_string(i); };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& nd = nodes[i];
    for (std::size_t c : nd.children) {
      if (c >= i) return "child does not precede parent" + where(i);
      ++parents[c];
    }
    auto child_bag = [&](std::size_t j) -> const std::vector<Vertex>& { return nodes[nd.children[j]].bag; };
    auto with = [](std::vector<Vertex> bag, Vertex v) {
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      return bag;
    };
    switch (nd.kind) {
      case NiceKind::leaf:
        if (!nd.children.empty() || !nd.bag.empty()) return "leaf must be childless with an empty bag" + where(i);
        break;
      case NiceKind::introduce:
        if (nd.children.size() != 1) return "introduce needs one child" + where(i);
        if (std::binary_search(child_bag(0).begin(), child_bag(0).end(), nd.vertex) ||
            with(child_bag(0), nd.vertex) != nd.bag)
          return "introduce bag mismatch" + where(i);
        break;
      case NiceKind::forget:
        if (nd.children.size() != 1) return "forget needs one child" + where(i);
        if (std::binary_search(nd.bag.begin(), nd.bag.end(), nd.vertex) || with(nd.bag, nd.vertex) != child_bag(0))
          return "forget bag mismatch" + where(i);
        break;
      case NiceKind::join:
        if (nd.children.size() != 2) return "join needs two children" + where(i);
        if (child_bag(0) != nd.bag || child_bag(1) != nd.bag) return "join bags differ" + where(i);
        break;
    }
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (parents[i] != 1) return "node has " + std::to_string(parents[i]) + " parents" + where(i);
  if (!nodes.back().bag.empty()) return "root bag is not empty";
  TreeDecomposition td;
  td.bags.reserve(nodes.size());
  td.parent.assign(nodes.size(), npos_node);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    td.bags.push_back(nodes[i].bag);
    for (std::size_t c : nodes[i].children) td.parent[c] = i;
    td.width = std::max(td.width, static_cast<int>(nodes[i].bag.size()) - 1);
  }
  if (td.width != ntd.width) return "width field differs from bags";
  return validate(g, td);
}

}  // namespace lgp
