#include <gtest/gtest.h>

#include "lgp/errors.hpp"
#include "lgp/pattern_algebra.hpp"
#include "lgp/treewidth.hpp"
#include "oracles.hpp"

using namespace lgp;

namespace {

bool independent_check(const Graph& g, const TreeDecomposition& td) {
  return oracle::valid_decomposition(g, td.bags, td.parent, td.width);
}

Graph random_tree(std::mt19937_64& rng, std::size_t n) { return oracle::random_connected(rng, n, 0.0); }

}  // namespace

TEST(Treewidth, GoldenValues) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_EQ(treewidth(random_tree(rng, n)).width, 1);
  EXPECT_EQ(treewidth(shapes::cycle(5)).width, 2);
  EXPECT_EQ(treewidth(shapes::clique(4)).width, 3);
  EXPECT_EQ(treewidth(shapes::clique(5)).width, 4);
  EXPECT_EQ(treewidth(join(shapes::rooted_clique(3), shapes::rooted_clique(3)).graph()).width, 2);
  EXPECT_EQ(treewidth(shapes::single_vertex()).width, 0);
  // 3x3 grid.
  std::vector<Edge> es;
  for (Vertex r = 0; r < 3; ++r)
    for (Vertex c = 0; c < 3; ++c) {
      if (c + 1 < 3) es.emplace_back(3 * r + c, 3 * r + c + 1);
      if (r + 1 < 3) es.emplace_back(3 * r + c, 3 * (r + 1) + c);
    }
  EXPECT_EQ(treewidth(Graph("grid", 9, {}, es)).width, 3);
  // Petersen graph.
  Graph petersen("petersen", 10, {},
                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                  {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_EQ(treewidth(petersen).width, 4);
}

TEST(Treewidth, WitnessesAreValid) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 80; ++i) {
    Graph g = oracle::random_graph(rng, 1 + i % 12, 0.35);
    auto r = treewidth(g);
    EXPECT_TRUE(independent_check(g, r.decomposition));
    EXPECT_EQ(validate(g, r.decomposition), std::nullopt);
    EXPECT_EQ(r.decomposition.width, r.width);
  }
}

TEST(Treewidth, ExactAgainstAllEliminationOrders) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    Graph g = oracle::random_graph(rng, 3 + i % 5, 0.5);
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), Vertex{0});
    int best = 1 << 20;
    do best = std::min(best, decomposition_from_order(g, order).width);
    while (std::next_permutation(order.begin(), order.end()));
    EXPECT_EQ(treewidth(g).width, best);
  }
}

TEST(Treewidth, MonotoneUnderInducedSubgraphs) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    Graph g = oracle::random_graph(rng, 10, 0.4);
    std::vector<Vertex> keep;
    std::bernoulli_distribution coin(0.6);
    for (Vertex v = 0; v < g.n(); ++v)
      if (coin(rng)) keep.push_back(v);
    if (keep.empty()) continue;
    EXPECT_LE(treewidth(g.induced(keep)).width, treewidth(g).width);
  }
}

TEST(Treewidth, JoiningATreeKeepsTheWidth) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 40; ++i) {
    auto p = oracle::random_pattern(rng, 7, 0.5);
    Graph t = random_tree(rng, 1 + i % 6);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(t.n() - 1));
    RootedPattern tree(t, pick(rng));
    int k = std::max(1, treewidth(p.graph()).width);
    EXPECT_LE(treewidth(join(p, tree).graph()).width, k);
  }
}

TEST(Treewidth, SizeGuard) {
  EXPECT_THROW(treewidth(shapes::cycle(15)), GuardError);
  EXPECT_NO_THROW(treewidth(shapes::cycle(14)));
  // Larger graphs still decompose heuristically.
  auto td = decompose(shapes::cycle(30));
  EXPECT_EQ(validate(shapes::cycle(30), td), std::nullopt);
  EXPECT_EQ(td.width, 2);
}

TEST(Treewidth, ValidatorRejectsBrokenDecompositions) {
  Graph c4 = shapes::cycle(4);
  TreeDecomposition td = treewidth(c4).decomposition;
  ASSERT_EQ(validate(c4, td), std::nullopt);
  auto no_edge = td;
  for (auto& b : no_edge.bags) b.erase(std::remove(b.begin(), b.end(), Vertex{0}), b.end());
  EXPECT_NE(validate(c4, no_edge), std::nullopt);
  auto bad_width = td;
  bad_width.width += 1;
  EXPECT_NE(validate(c4, bad_width), std::nullopt);
  TreeDecomposition split{{{0, 1, 2}, {1}, {0, 2, 3}}, {npos_node, 0, 1}, 2};
  EXPECT_NE(validate(c4, split), std::nullopt);
  EXPECT_FALSE(oracle::valid_decomposition(c4, split.bags, split.parent, split.width));
}

TEST(Treewidth, JsonShape) {
  auto j = to_json(treewidth(shapes::path(3)).decomposition);
  EXPECT_TRUE(j["bags"].is_array());
  EXPECT_TRUE(j["tree"].is_array());
  EXPECT_EQ(j["tree"].size() + 1, j["bags"].size());
}

TEST(NiceDecomposition, SingleBagTriangle) {
  Graph k3 = shapes::clique(3);
  TreeDecomposition td{{{0, 1, 2}}, {npos_node}, 2};
  auto ntd = nice_decomposition(k3, td);
  ASSERT_EQ(ntd.nodes.size(), 7u);
  EXPECT_EQ(ntd.nodes[0].kind, NiceKind::leaf);
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(ntd.nodes[i].kind, NiceKind::introduce);
  for (std::size_t i = 4; i <= 6; ++i) EXPECT_EQ(ntd.nodes[i].kind, NiceKind::forget);
  EXPECT_TRUE(ntd.nodes.back().bag.empty());
  EXPECT_EQ(ntd.width, 2);
  EXPECT_EQ(validate(k3, ntd), std::nullopt);
}

TEST(NiceDecomposition, WidthPreservedOnRandomDecompositions) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    Graph g = oracle::random_graph(rng, 1 + i % 11, 0.3);
    auto td = decomposition_from_order(g, oracle::random_permutation(rng, g.n()));
    ASSERT_TRUE(independent_check(g, td));
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.n() - 1));
    Vertex last = pick(rng);
    auto ntd = nice_decomposition(g, td, last);
    EXPECT_EQ(ntd.width, td.width);
    EXPECT_EQ(validate(g, ntd), std::nullopt);
    const auto& before = ntd.nodes[ntd.nodes[ntd.root()].children.at(0)];
    EXPECT_EQ(before.bag, std::vector<Vertex>{last});
    EXPECT_LE(ntd.nodes.size(), 4 * static_cast<std::size_t>(td.width + 2) * (g.n() + 1));
  }
}

TEST(NiceDecomposition, ValidOnCatalogPatterns) {
  std::vector<Graph> pats{shapes::clique(4), shapes::cycle(8), shapes::path(5), shapes::star(4),
                          join(shapes::rooted_clique(3), shapes::rooted_cycle(5)).graph()};
  for (const auto& p : pats) {
    auto ntd = nice_decomposition(p, treewidth(p).decomposition);
    EXPECT_EQ(validate(p, ntd), std::nullopt) << p.id();
    EXPECT_EQ(ntd.width, treewidth(p).width);
  }
}
