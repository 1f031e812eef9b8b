#include <gtest/gtest.h>

#include "lgp/generators.hpp"
#include "lgp/hom.hpp"
#include "lgp/wl.hpp"
#include "oracles.hpp"

using namespace lgp;

namespace {

Graph one_based(std::string id, std::size_t n, std::vector<Edge> es) {
  for (auto& [a, b] : es) {
    --a;
    --b;
  }
  return Graph(std::move(id), n, {}, std::move(es));
}

std::size_t cfi_size(const Graph& p) {
  std::size_t n = 0;
  for (Vertex v = 0; v < p.n(); ++v) n += std::size_t{1} << (p.degree(v) - 1);
  return n;
}

}  // namespace

TEST(Generators, FirstFixture) {
  auto [g, h] = fig1_pair();
  Graph two_triangles("t", 6, {}, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  Graph hexagon("h", 6, {}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  EXPECT_TRUE(oracle::isomorphic(g.graph, two_triangles));
  EXPECT_TRUE(oracle::isomorphic(h.graph, hexagon));
  EXPECT_EQ(g.meta["marked"], 0);
  EXPECT_EQ(h.meta["marked"], 0);
  EXPECT_EQ(g.graph.id(), "fig1-G1");
  EXPECT_EQ(h.graph.id(), "fig1-H1");
}

TEST(Generators, SecondFixture) {
  auto [g, h] = fig2_pair();
  Graph eg = one_based("g", 9, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 6}, {4, 5}, {4, 7}, {5, 6}, {6, 8}, {7, 8}, {7, 9}, {8, 9}});
  Graph eh = one_based("h", 9, {{1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {3, 6}, {4, 7}, {6, 9}, {7, 9}, {7, 8}, {9, 8}, {8, 5}});
  EXPECT_EQ(g.graph, eg);
  EXPECT_EQ(h.graph, eh);
  EXPECT_EQ(g.meta["marked"], 4);
  EXPECT_EQ(h.meta["marked"], 4);
  // Neither marked vertex lies on a triangle and both graphs hold two.
  EXPECT_EQ(hom_count_brute(shapes::rooted_clique(3), g.graph, 4), Count(0));
  EXPECT_EQ(hom_count_brute(shapes::rooted_clique(3), h.graph, 4), Count(0));
  EXPECT_EQ(hom_count_brute(shapes::clique(3), g.graph), Count(12));
  EXPECT_EQ(hom_count_brute(shapes::clique(3), h.graph), Count(12));
}

TEST(Generators, CycleUnions) {
  for (std::size_t m = 3; m <= 6; ++m) {
    auto [g, h] = cycle_union_pair(m);
    EXPECT_EQ(g.graph.n(), (m + 1) * (m + 2));
    EXPECT_EQ(h.graph.n(), (m + 1) * (m + 2));
    for (const auto* x : {&g.graph, &h.graph})
      for (Vertex v = 0; v < x->n(); ++v) EXPECT_EQ(x->degree(v), 2u);
    auto cg = g.graph.components();
    auto ch = h.graph.components();
    EXPECT_EQ(std::set<std::size_t>(cg.begin(), cg.end()).size(), m + 2);
    EXPECT_EQ(std::set<std::size_t>(ch.begin(), ch.end()).size(), m + 1);
    EXPECT_EQ(g.graph.id(), "cycle-union-m" + std::to_string(m) + "-G");
  }
  EXPECT_THROW(cycle_union_pair(2), std::invalid_argument);
}

TEST(Generators, CycleHierarchy) {
  for (std::size_t k = 4; k <= 6; ++k) {
    auto [g, h] = cycle_hierarchy_pair(k);
    EXPECT_EQ(g.graph.n(), k * (k + 1));
    EXPECT_EQ(h.graph.n(), k * (k + 1));
    EXPECT_FALSE(wl_refine(g.graph, h.graph).verdict.distinguished);
    EXPECT_TRUE(k_wl(g.graph, h.graph, 2).distinguished);
  }
  EXPECT_THROW(cycle_hierarchy_pair(3), std::invalid_argument);
}

TEST(Cfi, SizesAndSeparation) {
  for (const auto& p : {shapes::rooted_clique(3), shapes::rooted_clique(4), shapes::rooted_cycle(5)}) {
    auto c = cfi_pair(p);
    const Graph& tw = c.twisted.graph;
    const Graph& un = c.untwisted.graph;
    EXPECT_EQ(tw.n(), cfi_size(p.graph()));
    EXPECT_EQ(un.n(), cfi_size(p.graph()));
    EXPECT_EQ(c.base.size(), tw.n());
    EXPECT_EQ(hom_count_dp(p.graph(), tw).scalar(), Count(0)) << p.id();
    EXPECT_GT(hom_count_dp(p.graph(), un).scalar(), Count(0)) << p.id();
    EXPECT_FALSE(wl_refine(tw, un).verdict.distinguished);
    EXPECT_EQ(c.twisted.meta["twisted"], true);
    EXPECT_EQ(c.untwisted.meta["twisted"], false);
  }
}

TEST(Cfi, ProjectsOntoPattern) {
  for (const auto& p : {shapes::rooted_clique(4), shapes::rooted_cycle(4)}) {
    auto c = cfi_pair(p);
    for (const auto* x : {&c.twisted.graph, &c.untwisted.graph})
      for (auto [u, v] : x->edges()) EXPECT_TRUE(p.graph().adjacent(c.base[u], c.base[v]));
    std::vector<std::size_t> fibre(p.n(), 0);
    for (auto b : c.base) ++fibre[b];
    for (Vertex v = 0; v < p.n(); ++v) EXPECT_EQ(fibre[v], std::size_t{1} << (p.graph().degree(v) - 1));
  }
}

TEST(Cfi, ArgumentsAndDeterminism) {
  EXPECT_THROW(cfi_pair(shapes::rooted_path(2)), std::invalid_argument);
  auto a = cfi_pair(shapes::rooted_clique(4), 2);
  auto b = cfi_pair(shapes::rooted_clique(4), 2);
  EXPECT_EQ(a.twisted.graph, b.twisted.graph);
  EXPECT_EQ(a.untwisted.graph, b.untwisted.graph);
  EXPECT_EQ(a.v1, 2u);
  EXPECT_EQ(fig2_pair().first.graph, fig2_pair().first.graph);
}
