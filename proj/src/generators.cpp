#include "lgp/generators.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lgp {

namespace {

Graph from_one_based(std::string id, std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> out;
  for (auto [a, b] : edges) out.emplace_back(a - 1, b - 1);
  return Graph(std::move(id), n, {}, std::move(out));
}

Graph cycles(std::string id, std::size_t copies, std::size_t len) {
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < copies; ++c) {
    auto base = static_cast<Vertex>(c * len);
    for (std::size_t i = 0; i < len; ++i)
      edges.emplace_back(base + i, base + static_cast<Vertex>((i + 1) % len));
  }
  return Graph(std::move(id), copies * len, {}, std::move(edges));
}

MarkedGraph cycles_marked(std::string id, std::string family, std::size_t copies, std::size_t len) {
  nlohmann::json meta{{"family", std::move(family)}, {"copies", copies}, {"cycle", len}};
  return {cycles(std::move(id), copies, len), meta};
}

}  // namespace

MarkedPair fig1_pair() {
  Graph g("fig1-G1", 6, {}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  Graph h("fig1-H1", 6, {}, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 3}, {3, 5}, {4, 5}});
  return {{g, {{"family", "fig1"}, {"marked", 0}}}, {h, {{"family", "fig1"}, {"marked", 0}}}};
}

MarkedPair fig2_pair() {
  Graph g = from_one_based("fig2-G2", 9,
                           {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 6}, {4, 5}, {4, 7}, {5, 6}, {6, 8}, {7, 8}, {7, 9}, {8, 9}});
  Graph h = from_one_based("fig2-H2", 9,
                           {{1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {3, 6}, {4, 7}, {6, 9}, {7, 9}, {7, 8}, {9, 8}, {8, 5}});
  return {{g, {{"family", "fig2"}, {"marked", 4}}}, {h, {{"family", "fig2"}, {"marked", 4}}}};
}

MarkedPair cycle_union_pair(std::size_t m) {
  if (m < 3) throw std::invalid_argument("cycle-union needs m >= 3, got " + std::to_string(m));
  auto tag = "cycle-union-m" + std::to_string(m);
  return {cycles_marked(tag + "-G", "cycle-union", m + 2, m + 1), cycles_marked(tag + "-H", "cycle-union", m + 1, m + 2)};
}

MarkedPair cycle_hierarchy_pair(std::size_t k) {
  if (k < 4) throw std::invalid_argument("cycle-hierarchy needs k >= 4, got " + std::to_string(k));
  auto tag = "cycle-hierarchy-k" + std::to_string(k);
  return {cycles_marked(tag + "-G", "cycle-hierarchy", k, k + 1),
          cycles_marked(tag + "-H", "cycle-hierarchy", k + 1, k)};
}

CfiPair cfi_pair(const RootedPattern& p, std::optional<Vertex> v1_opt) {
  const Graph& pg = p.graph();
  const Vertex v1 = v1_opt.value_or(p.root());
  if (v1 >= pg.n()) throw std::invalid_argument("distinguished vertex out of range");
  if (pg.degree(v1) < 2)
    throw std::invalid_argument("distinguished vertex " + std::to_string(v1) + " of '" + p.id() +
                                "' has degree " + std::to_string(pg.degree(v1)) + "; at least 2 is required");
  CfiPair out;
  out.v1 = v1;
  auto build = [&](bool twisted, std::vector<Vertex>& base) {
    // gadget[v] lists (vertex id, assignment) with bit i (MSB first) for the
    // edge to the i-th neighbour of v.
    std::vector<std::vector<std::pair<Vertex, std::uint64_t>>> gadget(pg.n());
    Vertex next = 0;
    base.clear();
    for (Vertex v = 0; v < pg.n(); ++v) {
      const std::size_t d = pg.degree(v);
      const unsigned want = (twisted && v == v1) ? 1 : 0;
      for (std::uint64_t f = 0; f < (std::uint64_t{1} << d); ++f) {
        if (static_cast<unsigned>(std::popcount(f) % 2) != want) continue;
        gadget[v].emplace_back(next++, f);
        base.push_back(v);
      }
    }
    auto bit = [&](Vertex v, std::uint64_t f, Vertex other) {
      auto nb = pg.neighbors(v);
      auto i = static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), other) - nb.begin());
      return (f >> (nb.size() - 1 - i)) & 1u;
    };
    std::vector<Edge> edges;
    for (auto [a, b] : pg.edges())
      for (auto [x, fx] : gadget[a])
        for (auto [y, fy] : gadget[b])
          if (bit(a, fx, b) == bit(b, fy, a)) edges.emplace_back(x, y);
    std::string id = "cfi-" + p.id() + (twisted ? "-twisted" : "-untwisted");
    nlohmann::json meta{{"family", "cfi"}, {"pattern", p.id()}, {"v1", v1}, {"twisted", twisted}};
    return MarkedGraph{Graph(std::move(id), next, {}, std::move(edges)), std::move(meta)};
  };
  std::vector<Vertex> base_t;
  out.twisted = build(true, base_t);
  out.untwisted = build(false, out.base);
  return out;
}

}  // namespace lgp
