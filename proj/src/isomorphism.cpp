#include "lgp/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

namespace lgp {
namespace {

// Per-vertex isomorphism invariant used to prune candidate images.
std::vector<std::uint64_t> vertex_invariants(const Graph& g) {
  std::vector<std::uint64_t> inv(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    std::vector<std::size_t> nd;
    for (Vertex u : g.neighbors(v)) nd.push_back(g.degree(u));
    std::sort(nd.begin(), nd.end());
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) { h = (h ^ x) * 1099511628211ULL; };
    mix(g.label(v));
    mix(g.degree(v));
    for (auto d : nd) mix(d);
    inv[v] = h;
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::optional<Edge> roots)
      : g_(g), h_(h), inv_g_(vertex_invariants(g)), inv_h_(vertex_invariants(h)) {
    map_.assign(g.n(), unmapped);
    used_.assign(h.n(), false);
    pos_.assign(g.n(), 0);
    build_order(roots ? std::optional<Vertex>(roots->first) : std::nullopt);
    if (roots) fixed_ = roots->second;
  }

  [[nodiscard]] bool compatible() const {
    if (g_.n() != h_.n() || g_.m() != h_.m()) return false;
    auto a = inv_g_, b = inv_h_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  // Counts isomorphisms, stopping after `limit`.
  std::uint64_t run(std::uint64_t limit) {
    limit_ = limit;
    found_ = 0;
    if (!compatible()) return 0;
    extend(0);
    return found_;
  }

 private:
  static constexpr Vertex unmapped = static_cast<Vertex>(-1);

  void build_order(std::optional<Vertex> start) {
    std::vector<bool> seen(g_.n(), false);
    auto bfs = [&](Vertex s) {
      std::size_t head = order_.size();
      seen[s] = true;
      order_.push_back(s);
      while (head < order_.size()) {
        Vertex u = order_[head++];
        for (Vertex w : g_.neighbors(u))
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
      }
    };
    if (start) bfs(*start);
    for (Vertex v = 0; v < g_.n(); ++v)
      if (!seen[v]) bfs(v);
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = i;
  }

  bool consistent(Vertex u, Vertex c) const {
    if (used_[c] || inv_g_[u] != inv_h_[c]) return false;
    std::size_t mapped_nb = 0;
    for (Vertex x : g_.neighbors(u)) {
      if (map_[x] == unmapped) continue;
      ++mapped_nb;
      if (!h_.adjacent(c, map_[x])) return false;
    }
    std::size_t used_nb = 0;
    for (Vertex y : h_.neighbors(c))
      if (used_[y]) ++used_nb;
    return used_nb == mapped_nb;
  }

  void assign(Vertex u, Vertex c, std::size_t depth) {
    map_[u] = c;
    used_[c] = true;
    extend(depth + 1);
    used_[c] = false;
    map_[u] = unmapped;
  }

  void extend(std::size_t depth) {
    if (found_ >= limit_) return;
    if (depth == order_.size()) {
      ++found_;
      return;
    }
    Vertex u = order_[depth];
    if (depth == 0 && fixed_) {
      if (consistent(u, *fixed_)) assign(u, *fixed_, depth);
      return;
    }
    Vertex anchor = unmapped;
    for (Vertex x : g_.neighbors(u))
      if (map_[x] != unmapped) {
        anchor = x;
        break;
      }
    if (anchor != unmapped) {
      for (Vertex c : h_.neighbors(map_[anchor]))
        if (consistent(u, c)) assign(u, c, depth);
    } else {
      for (Vertex c = 0; c < h_.n(); ++c)
        if (consistent(u, c)) assign(u, c, depth);
    }
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::uint64_t> inv_g_, inv_h_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> pos_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::optional<Vertex> fixed_;
  std::uint64_t limit_ = 1;
  std::uint64_t found_ = 0;
};

// ---- canonical codes ------------------------------------------------------

// Ordered-partition refinement on a small colored graph; colors are ranks.
class BlockCanon {
 public:
  BlockCanon(std::vector<std::vector<int>> adj, const std::vector<std::string>& colors)
      : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())) {
    std::vector<std::string> distinct = colors;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> init(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      init[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), colors[static_cast<std::size_t>(v)]) - distinct.begin());
    initial_ = init;
    std::vector<std::string> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& c : sorted) header_ += c + ";";
    nbr_sets_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      auto& s = nbr_sets_[static_cast<std::size_t>(v)];
      s.assign(static_cast<std::size_t>(n_), false);
      for (int w : adj_[static_cast<std::size_t>(v)]) s[static_cast<std::size_t>(w)] = true;
    }
  }

  std::string code() {
    auto colors = initial_;
    refine(colors);
    search(colors);
    return std::to_string(n_) + "{" + header_ + "#" + best_ + "}";
  }

 private:
  static int rerank(std::vector<int>& colors, const std::vector<std::vector<int>>& sigs) {
    std::vector<std::size_t> idx(sigs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sigs[a] < sigs[b]; });
    int rank = -1;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i == 0 || sigs[idx[i]] != sigs[idx[i - 1]]) ++rank;
      colors[idx[i]] = rank;
    }
    return rank + 1;
  }

  void refine(std::vector<int>& colors) const {
    int cells = -1;
    while (true) {
      std::vector<std::vector<int>> sigs(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        auto& s = sigs[static_cast<std::size_t>(v)];
        s.push_back(colors[static_cast<std::size_t>(v)]);
        std::vector<int> nc;
        for (int w : adj_[static_cast<std::size_t>(v)]) nc.push_back(colors[static_cast<std::size_t>(w)]);
        std::sort(nc.begin(), nc.end());
        s.insert(s.end(), nc.begin(), nc.end());
      }
      int now = rerank(colors, sigs);
      if (now == cells) return;
      cells = now;
    }
  }

  bool twins(int u, int w) const {
    if (initial_[static_cast<std::size_t>(u)] != initial_[static_cast<std::size_t>(w)]) return false;
    const auto& a = nbr_sets_[static_cast<std::size_t>(u)];
    const auto& b = nbr_sets_[static_cast<std::size_t>(w)];
    for (int x = 0; x < n_; ++x) {
      if (x == u || x == w) continue;
      if (a[static_cast<std::size_t>(x)] != b[static_cast<std::size_t>(x)]) return false;
    }
    return true;
  }

  void search(const std::vector<int>& colors) {
    std::vector<int> count(static_cast<std::size_t>(n_), 0);
    for (int c : colors) ++count[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (count[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      std::vector<int> at(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) at[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v;
      std::string enc;
      enc.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2));
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
          enc.push_back(nbr_sets_[static_cast<std::size_t>(at[static_cast<std::size_t>(i)])]
                                 [static_cast<std::size_t>(at[static_cast<std::size_t>(j)])]
                            ? '1'
                            : '0');
      if (!have_best_ || enc < best_) {
        best_ = std::move(enc);
        have_best_ = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<std::vector<int>> sigs(static_cast<std::size_t>(n_));
      for (int w = 0; w < n_; ++w)
        sigs[static_cast<std::size_t>(w)] = {colors[static_cast<std::size_t>(w)],
                                              colors[static_cast<std::size_t>(w)] == target && w != v ? 1 : 0};
      std::vector<int> next = colors;
      rerank(next, sigs);
      refine(next);
      search(next);
    }
  }

  std::vector<std::vector<int>> adj_;
  int n_;
  std::vector<int> initial_;
  std::vector<std::vector<bool>> nbr_sets_;
  std::string header_;
  std::string best_;
  bool have_best_ = false;
};

// Block-cut structure of one connected component.
class BlockTree {
 public:
  BlockTree(const Graph& g, Vertex start) : g_(g) {
    disc_.assign(g.n(), 0);
    low_.assign(g.n(), 0);
    blocks_of_.assign(g.n(), {});
    in_component_.assign(g.n(), false);
    dfs(start, static_cast<Vertex>(-1));
    in_component_[start] = true;
  }

  std::string vertex_code(Vertex v, std::size_t parent_block) const {
    std::vector<std::string> parts;
    for (std::size_t b : blocks_of_[v])
      if (b != parent_block) parts.push_back(block_code(b, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(" + std::to_string(g_.label(v));
    for (auto& p : parts) out += p;
    out += ")";
    return out;
  }

  [[nodiscard]] std::vector<Vertex> component_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g_.n(); ++v)
      if (in_component_[v]) out.push_back(v);
    return out;
  }

 private:
  std::string block_code(std::size_t b, Vertex attach) const {
    const auto& verts = blocks_[b];
    std::vector<std::vector<int>> adj(verts.size());
    std::vector<std::string> colors(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (i != j && g_.adjacent(verts[i], verts[j])) adj[i].push_back(static_cast<int>(j));
      colors[i] = verts[i] == attach ? "*" : vertex_code(verts[i], b);
    }
    return "[" + BlockCanon(std::move(adj), colors).code() + "]";
  }

  void dfs(Vertex u, Vertex parent) {
    disc_[u] = low_[u] = ++timer_;
    in_component_[u] = true;
    for (Vertex w : g_.neighbors(u)) {
      if (w == parent) continue;
      if (disc_[w] == 0) {
        edge_stack_.emplace_back(u, w);
        dfs(w, u);
        low_[u] = std::min(low_[u], low_[w]);
        if (low_[w] >= disc_[u]) {
          std::vector<Vertex> block;
          while (true) {
            auto e = edge_stack_.back();
            edge_stack_.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
            if (e == Edge{u, w}) break;
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          for (Vertex x : block) blocks_of_[x].push_back(blocks_.size());
          blocks_.push_back(std::move(block));
        }
      } else if (disc_[w] < disc_[u]) {
        edge_stack_.emplace_back(u, w);
        low_[u] = std::min(low_[u], disc_[w]);
      }
    }
  }

  const Graph& g_;
  std::vector<std::size_t> disc_, low_;
  std::size_t timer_ = 0;
  std::vector<Edge> edge_stack_;
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::vector<std::size_t>> blocks_of_;
  std::vector<bool> in_component_;
};

constexpr auto no_block = static_cast<std::size_t>(-1);

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) { return IsoSearch(g, h, std::nullopt).run(1) == 1; }

bool is_isomorphic(const RootedPattern& p, const RootedPattern& q) {
  return IsoSearch(p.graph(), q.graph(), Edge{p.root(), q.root()}).run(1) == 1;
}

std::uint64_t automorphism_count(const RootedPattern& p) {
  return IsoSearch(p.graph(), p.graph(), Edge{p.root(), p.root()}).run(~std::uint64_t{0});
}

std::uint64_t automorphism_count(const Graph& g) { return IsoSearch(g, g, std::nullopt).run(~std::uint64_t{0}); }

std::string rooted_code(const Graph& g, Vertex root) { return BlockTree(g, root).vertex_code(root, no_block); }

std::string canonical_code(const RootedPattern& p) { return "R" + rooted_code(p.graph(), p.root()); }

std::string canonical_code(const Graph& g) {
  std::vector<std::string> parts;
  std::vector<bool> done(g.n(), false);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (done[s]) continue;
    BlockTree tree(g, s);
    std::optional<std::string> best;
    for (Vertex v : tree.component_vertices()) {
      done[v] = true;
      auto c = tree.vertex_code(v, no_block);
      if (!best || c < *best) best = std::move(c);
    }
    parts.push_back(std::move(*best));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "G" + std::to_string(g.n()) + ":";
  for (auto& p : parts) out += p + "|";
  return out;
}

}  // namespace lgp
