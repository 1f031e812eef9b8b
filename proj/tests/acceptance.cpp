// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Limits are wall-clock seconds on a single core.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lgp/advisor.hpp"
#include "lgp/features.hpp"
#include "lgp/generators.hpp"
#include "lgp/hom.hpp"
#include "lgp/io.hpp"
#include "lgp/pattern_algebra.hpp"
#include "lgp/pattern_tree.hpp"
#include "lgp/treewidth.hpp"
#include "lgp/wl.hpp"
#include "oracles.hpp"

using namespace lgp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs > limit_s) {
    o.ok = false;
    o.detail = "over time limit";
  }
  if (!o.ok) ++failures;
  std::printf("%s  %2d  %-28s %8.2fs / %4.0fs  %s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), secs, limit_s,
              o.detail.c_str());
  std::fflush(stdout);
}

std::string str(Count c) { return c.str(); }

Graph collapse_labels(const Graph& g) { return Graph(g.id(), g.n(), {}, g.edges()); }

// 1

Outcome triangle_fixture() {
  Outcome o;
  auto [g, h] = fig1_pair();
  auto k3 = shapes::rooted_clique(3);
  auto cg = hom_count_dp(k3, g.graph);
  auto ch = hom_count_dp(k3, h.graph);
  for (Vertex v = 0; v < 6; ++v) {
    o.require(cg.counts[v] == Count(2), "hom(K3, G1^" + std::to_string(v) + ") = " + str(cg.counts[v]));
    o.require(ch.counts[v] == Count(0), "hom(K3, H1^" + std::to_string(v) + ") = " + str(ch.counts[v]));
    o.require(hom_count_brute(k3, g.graph, v) == Count(2), "brute count on G1");
    o.require(hom_count_brute(k3, h.graph, v) == Count(0), "brute count on H1");
  }
  o.require(!wl_refine(g.graph, h.graph).verdict.distinguished, "1-WL separates the pair");
  auto f = f_wl(g.graph, h.graph, {k3}).verdict;
  o.require(f.distinguished && f.round == 0u, "{K3}-WL does not separate at round 0");
  if (o.ok) o.detail = "counts 2/0, 1-WL equal, {K3}-WL round 0";
  return o;
}

// 2

Outcome one_round_fixture() {
  Outcome o;
  auto [g, h] = fig2_pair();
  std::vector<RootedPattern> f{shapes::rooted_clique(3)};
  auto r = f_wl(g.graph, h.graph, f);
  o.require(r.verdict.distinguished && r.verdict.round == 1u, "graph verdict is not round 1");
  Vertex v = g.meta["marked"].get<Vertex>();
  Vertex w = h.meta["marked"].get<Vertex>();
  auto vv = vertex_verdict(r, v, w);
  o.require(vv.distinguished && vv.round == 1u, "marked vertices not separated at round 1");
  auto rep = theorem1_check(g.graph, h.graph, f, 1, {}, std::pair{v, w});
  o.require(rep.witness.has_value(), "no witness tree");
  o.require(rep.forward_violations == 0, "forward violation");
  if (rep.witness) {
    o.require(rep.witness_g == Count(0) && rep.witness_h == Count(4),
              "witness counts (" + str(rep.witness_g) + ", " + str(rep.witness_h) + ")");
    auto flat = flatten(*rep.witness, f);
    o.require(hom_count_brute(flat, g.graph, v) == rep.witness_g, "witness count at v disagrees with brute");
    o.require(hom_count_brute(flat, h.graph, w) == rep.witness_h, "witness count at w disagrees with brute");
  }
  if (o.ok) o.detail = "round 1, witness counts (0, 4)";
  return o;
}

// 3

Outcome dp_grid() {
  Outcome o;
  std::vector<RootedPattern> ps{shapes::rooted_clique(3), shapes::rooted_clique(4)};
  for (std::size_t k = 3; k <= 8; ++k) ps.push_back(shapes::rooted_cycle(k));
  for (std::size_t k = 1; k <= 4; ++k) ps.push_back(shapes::rooted_path(k));
  for (auto& q : spasm(shapes::rooted_cycle(4))) ps.push_back(q);
  std::vector<HomPlan> plans;
  for (const auto& p : ps) plans.emplace_back(p);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::size_t checks = 0;
  std::size_t nonzero = 0;
  for (int i = 0; i < 300; ++i) {
    Graph drawn = oracle::random_graph(rng, size(rng), i % 2 ? 0.3 : 0.5, 3);
    // Grid patterns carry label 0 only; the unlabeled copy keeps their
    // counts from collapsing to zero.
    for (const Graph& g : {drawn, collapse_labels(drawn)})
      for (std::size_t j = 0; j < ps.size(); ++j) {
        auto dp = plans[j].rooted_counts(g);
        for (Vertex v = 0; v < g.n(); ++v) {
          auto b = hom_count_brute(ps[j], g, v);
          ++checks;
          if (!b.is_zero()) ++nonzero;
          if (dp[v] != b) {
            o.require(false, "mismatch for " + ps[j].id() + " at vertex " + std::to_string(v) + ": " + str(dp[v]) +
                                 " vs " + str(b));
            return o;
          }
        }
      }
  }
  o.detail = std::to_string(checks) + " anchored counts, " + std::to_string(nonzero) + " nonzero, 0 mismatches";
  return o;
}

// 4

Outcome subgraph_identity() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::size_t checks = 0;
  for (int i = 0; i < 300; ++i) {
    auto p = oracle::random_pattern(rng, 5, 0.4, 2);
    Graph g = oracle::random_graph(rng, 4 + i % 5, 0.5, 2);
    auto sub = sub_counts(p, g);
    for (Vertex v = 0; v < g.n(); ++v, ++checks)
      if (sub[v] != Count(oracle::subgraph_count(p, g, v))) {
        o.require(false, "mismatch on instance " + std::to_string(i));
        return o;
      }
  }
  o.detail = std::to_string(checks) + " anchored counts, 0 mismatches";
  return o;
}

// 5

Outcome tree_recursion() {
  Outcome o;
  std::vector<RootedPattern> f{shapes::rooted_clique(3), shapes::rooted_cycle(4)};
  auto stream = enumerate_pattern_trees(f, {}, {0, 1});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, stream.trees.size() - 1);
  std::vector<PatternTree> trees;
  for (int i = 0; i < 200; ++i) trees.push_back(stream.trees[pick(rng)]);
  std::vector<RootedPattern> flat;
  for (const auto& t : trees) flat.push_back(flatten(t, f));
  std::size_t checks = 0;
  for (int i = 0; i < 50; ++i) {
    Graph g = oracle::random_graph(rng, 5 + i % 4, 0.45, 2);
    TreeEvaluator ev(g, f);
    for (std::size_t t = 0; t < trees.size(); ++t) {
      auto c = ev.counts(trees[t]);
      for (Vertex v = 0; v < g.n(); ++v, ++checks)
        if (c[v] != hom_count_brute(flat[t], g, v)) {
          o.require(false, "mismatch on tree " + std::to_string(t));
          return o;
        }
    }
  }
  o.detail = std::to_string(checks) + " anchored counts from " + std::to_string(stream.trees.size()) + " trees";
  return o;
}

// 6

Outcome forward_direction() {
  Outcome o;
  std::vector<std::pair<Graph, Graph>> pairs;
  auto add = [&](const MarkedPair& p) { pairs.emplace_back(p.first.graph, p.second.graph); };
  add(fig1_pair());
  add(fig2_pair());
  add(cycle_union_pair(3));
  add(cycle_hierarchy_pair(4));
  auto cfi = cfi_pair(shapes::rooted_clique(3));
  pairs.emplace_back(cfi.twisted.graph, cfi.untwisted.graph);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    if (i % 3 == 0) {
      pairs.emplace_back(oracle::random_regular(rng, 8, 3), oracle::random_regular(rng, 8, 3));
    } else if (i % 3 == 1) {
      Graph g = oracle::random_graph(rng, 7, 0.4);
      pairs.emplace_back(g, g.permuted(oracle::random_permutation(rng, 7)));
    } else {
      pairs.emplace_back(oracle::random_graph(rng, 7, 0.4), oracle::random_graph(rng, 7, 0.4));
    }
  }
  std::vector<std::vector<RootedPattern>> families{
      {}, {shapes::rooted_clique(3)}, {shapes::rooted_cycle(3), shapes::rooted_cycle(4)}};
  std::size_t trees = 0;
  for (const auto& f : families)
    for (const auto& [g, h] : pairs) {
      auto r = theorem1_check(g, h, f, 2, {});
      trees += r.trees_checked;
      o.require(!r.truncated, "enumeration truncated");
      if (r.forward_violations > 0) {
        o.require(false, "violation on " + g.id() + " / " + h.id());
        return o;
      }
    }
  o.detail = std::to_string(pairs.size() * families.size()) + " runs, " + std::to_string(trees) +
             " tree checks, 0 violations";
  return o;
}

// 7

Outcome cycle_union_family() {
  Outcome o;
  for (std::size_t m : {3u, 4u}) {
    auto [g, h] = cycle_union_pair(m);
    std::vector<RootedPattern> f;
    for (std::size_t k = 3; k <= m; ++k) {
      f.push_back(shapes::rooted_clique(k));
      f.push_back(shapes::rooted_cycle(k));
    }
    o.require(!f_wl(g.graph, h.graph, f).verdict.distinguished, "F-WL separates m=" + std::to_string(m));
    auto a = hom_count_brute(shapes::cycle(m + 1), g.graph);
    auto b = hom_count_brute(shapes::cycle(m + 1), h.graph);
    o.require(a != b, "hom(C_{m+1}) equal for m=" + std::to_string(m));
    o.require(k_wl(g.graph, h.graph, 2).distinguished, "2-WL does not separate m=" + std::to_string(m));
    o.detail += "m=" + std::to_string(m) + ": hom(C" + std::to_string(m + 1) + ") " + str(a) + " vs " + str(b) + "  ";
  }
  return o;
}

// 8

Outcome cycle_hierarchy() {
  Outcome o;
  for (std::size_t k : {4u, 5u}) {
    auto [g, h] = cycle_hierarchy_pair(k);
    std::vector<RootedPattern> f;
    for (std::size_t j = 3; j < k; ++j) f.push_back(shapes::rooted_cycle(j));
    o.require(!f_wl(g.graph, h.graph, f).verdict.distinguished, "shorter cycles separate k=" + std::to_string(k));
    f.push_back(shapes::rooted_cycle(k));
    auto v = f_wl(g.graph, h.graph, f).verdict;
    o.require(v.distinguished && v.round == 0u, "C3..C" + std::to_string(k) + " does not separate at round 0");
  }
  if (o.ok) o.detail = "k=4,5";
  return o;
}

// 9

Outcome parity_construction() {
  Outcome o;
  auto c3 = cfi_pair(shapes::rooted_clique(3));
  const Graph& t3 = c3.twisted.graph;
  const Graph& u3 = c3.untwisted.graph;
  o.require(t3.n() == 6 && u3.n() == 6, "K3 sizes " + std::to_string(t3.n()) + "+" + std::to_string(u3.n()));
  o.require(hom_count_brute(shapes::clique(3), t3) == Count(0), "hom(K3, twisted) != 0");
  o.require(hom_count_brute(shapes::clique(3), u3) == Count(12), "hom(K3, untwisted) != 12");
  o.require(!wl_refine(t3, u3).verdict.distinguished, "1-WL separates the K3 pair");
  o.require(k_wl(t3, u3, 2).distinguished, "2-WL does not separate the K3 pair");

  auto c4 = cfi_pair(shapes::rooted_clique(4));
  const Graph& t4 = c4.twisted.graph;
  const Graph& u4 = c4.untwisted.graph;
  auto a = hom_count_brute(shapes::clique(4), t4);
  auto b = hom_count_brute(shapes::clique(4), u4);
  o.require(a == Count(0) && a != b, "hom(K4) " + str(a) + " vs " + str(b));
  o.require(!k_wl(t4, u4, 2).distinguished, "2-WL separates the K4 pair");
  o.require(t4.n() == 32 && u4.n() == 32,
            "K4 pair has " + std::to_string(t4.n()) + "+" + std::to_string(u4.n()) +
                " vertices, expected 32+32 (sum of 2^(deg-1) gives 16)");
  if (o.ok) o.detail = "K3 6+6, K4 32+32";
  return o;
}

// 10

Outcome join_redundancy() {
  Outcome o;
  std::mt19937_64 rng(10);
  std::size_t premises = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<RootedPattern> f;
    if (i % 2) f.push_back(oracle::random_pattern(rng, 4, 0.5));
    auto p1 = oracle::random_pattern(rng, 4, 0.5);
    auto p2 = oracle::random_pattern(rng, 4, 0.5);
    Graph g;
    Graph h;
    switch (i % 3) {
      case 0:
        g = oracle::random_regular(rng, 10, 3);
        h = oracle::random_regular(rng, 10, 3);
        break;
      case 1:
        g = oracle::random_regular(rng, 8, 2);
        h = oracle::random_regular(rng, 8, 2);
        break;
      default:
        g = oracle::random_graph(rng, 8, 0.4);
        h = g.permuted(oracle::random_permutation(rng, 8));
        break;
    }
    auto with_both = f;
    with_both.push_back(p1);
    with_both.push_back(p2);
    if (f_wl(g, h, with_both).verdict.distinguished) continue;
    ++premises;
    auto with_join = f;
    with_join.push_back(join(p1, p2));
    if (f_wl(g, h, with_join).verdict.distinguished) {
      o.require(false, "violation on triple " + std::to_string(i));
      return o;
    }
  }
  o.detail = std::to_string(premises) + " of 100 triples meet the premise, 0 violations";
  return o;
}

// 11

Outcome advisor_goldens() {
  Outcome o;
  auto k3 = shapes::rooted_clique(3).renamed("K3");
  auto k4 = shapes::rooted_clique(4).renamed("K4");
  auto bowtie = join(k3, k3).renamed("bowtie");
  auto r1 = advise({k3}, {bowtie});
  const auto& a1 = r1.candidates.at(0);
  o.require(a1.kind == AdviceKind::redundant && a1.factors == std::vector<std::string>{"K3", "K3"},
            "bowtie is " + std::string(advice_name(a1.kind)));
  auto r2 = advise({k3}, {k4});
  const auto& a2 = r2.candidates.at(0);
  o.require(a2.kind == AdviceKind::guaranteed_gain && a2.rule == "treewidth",
            "K4 is " + std::string(advice_name(a2.kind)) + " " + a2.rule);
  o.require(r2.bound_f == 2 && r2.bound_final == 3, "bound for {K3} + K4");
  auto r3 = advise({k3, k4}, {shapes::rooted_cycle(5).renamed("C5")});
  const auto& a3 = r3.candidates.at(0);
  o.require(a3.kind == AdviceKind::guaranteed_gain && a3.rule == "no-hom",
            "C5 is " + std::string(advice_name(a3.kind)) + " " + a3.rule);
  o.require(r3.bound_f == 3, "bound for {K3, K4} is " + std::to_string(r3.bound_f));
  if (o.ok) o.detail = "REDUNDANT(K3,K3), GAIN(treewidth), GAIN(no-hom), bounds 2/3/3";
  return o;
}

// 12

Outcome normalization() {
  Outcome o;
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> size(3, 14);
  std::vector<Graph> gs;
  for (int i = 0; i < 1000; ++i) gs.push_back(oracle::random_graph(rng, size(rng), 0.3, 3, "g" + std::to_string(i)));
  std::vector<RootedPattern> ps{shapes::rooted_clique(3).renamed("K3"), shapes::rooted_cycle(4).renamed("C4"),
                                shapes::rooted_path(2).renamed("L2"), shapes::rooted_cycle(5).renamed("C5")};
  auto fm = compute_features(gs, ps, CountMode::hom, 1);
  WriteOptions opt;
  opt.normalize = Normalize::log_z;
  opt.stats = log_z_stats(fm);
  LabelAlphabet alphabet;
  alphabet.intern("1");
  alphabet.intern("2");
  std::stringstream text;
  write_features(text, fm, alphabet, opt);
  auto stats = read_stats_header(text);
  o.require(stats.size() == ps.size(), "header statistics missing");
  std::string line;
  std::getline(text, line);
  std::vector<std::vector<double>> z(ps.size());
  std::size_t gi = 0;
  std::size_t v = 0;
  std::size_t rebuilt = 0;
  while (std::getline(text, line)) {
    while (v >= fm.graphs[gi].n) {
      ++gi;
      v = 0;
    }
    std::stringstream ss(line);
    std::string field;
    for (int skip = 0; skip < 3; ++skip) std::getline(ss, field, ',');
    for (std::size_t c = 0; c < ps.size(); ++c) {
      std::getline(ss, field, ',');
      double x = std::stod(field);
      z[c].push_back(x);
      if (inverse_log_z(x, stats[c]) != fm.graphs[gi].columns[c][v]) {
        o.require(false, "count not reconstructible in column " + stats[c].name);
        return o;
      }
      ++rebuilt;
    }
    ++v;
  }
  std::size_t checked = 0;
  for (std::size_t c = 0; c < ps.size(); ++c) {
    if (stats[c].constant) continue;
    ++checked;
    double mean = 0;
    for (double x : z[c]) mean += x;
    mean /= static_cast<double>(z[c].size());
    double var = 0;
    for (double x : z[c]) var += (x - mean) * (x - mean);
    double sd = std::sqrt(var / static_cast<double>(z[c].size() - 1));
    o.require(std::abs(mean) < 1e-9, stats[c].name + " mean " + std::to_string(mean));
    o.require(std::abs(sd - 1) < 1e-9, stats[c].name + " stddev " + std::to_string(sd));
  }
  if (o.ok) o.detail = std::to_string(checked) + " columns standardized, " + std::to_string(rebuilt) + " cells rebuilt";
  return o;
}

// 13

Outcome treewidth_goldens() {
  Outcome o;
  Graph tree("tree", 8, {}, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {5, 6}, {5, 7}});
  auto bowtie = join(shapes::rooted_clique(3), shapes::rooted_clique(3)).graph();
  std::vector<std::pair<Graph, int>> cases{
      {tree, 1}, {shapes::cycle(5), 2}, {shapes::clique(4), 3}, {shapes::clique(5), 4}, {bowtie, 2}};
  for (const auto& [g, want] : cases) {
    auto r = treewidth(g);
    o.require(r.width == want, g.id() + " width " + std::to_string(r.width));
    o.require(oracle::valid_decomposition(g, r.decomposition.bags, r.decomposition.parent, want),
              g.id() + " decomposition rejected");
    auto nice = nice_decomposition(g, r.decomposition);
    o.require(!validate(g, nice).has_value(), g.id() + " nice decomposition invalid");
  }
  if (o.ok) o.detail = "1, 2, 3, 4, 2";
  return o;
}

// 14

int run_cli(const std::string& args) {
  int st = std::system((std::string(LGP_CLI) + " " + args).c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  auto dir = std::filesystem::temp_directory_path() / ("lgp_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(14);
  LabelAlphabet alphabet;
  alphabet.intern("1");
  alphabet.intern("2");
  {
    std::ofstream data(dir / "data.jsonl");
    for (int i = 0; i < 100; ++i)
      data << serialize_graph(oracle::random_graph(rng, 5 + i % 10, 0.35, 3, "g" + std::to_string(i)), alphabet)
           << '\n';
    std::ofstream pats(dir / "patterns.json");
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : {shapes::rooted_clique(3).renamed("K3"), shapes::rooted_cycle(4).renamed("C4"),
                          shapes::rooted_cycle(5).renamed("C5"), shapes::rooted_path(3).renamed("L3")})
      arr.push_back(pattern_to_json(p, alphabet));
    pats << arr.dump() << '\n';
  }
  std::vector<std::string> outs;
  for (int threads : {1, 4, 8, 8}) {
    auto out = dir / ("out" + std::to_string(outs.size()) + ".csv");
    int code = run_cli("--threads " + std::to_string(threads) + " --output " + out.string() + " features " +
                       (dir / "data.jsonl").string() + " --patterns " + (dir / "patterns.json").string() +
                       " --normalize log-z");
    o.require(code == 0, "features exited with " + std::to_string(code));
    outs.push_back(slurp(out));
  }
  for (std::size_t i = 1; i < outs.size(); ++i) o.require(outs[i] == outs[0], "output " + std::to_string(i) + " differs");
  o.require(!outs[0].empty(), "empty output");
  std::filesystem::remove_all(dir);
  if (o.ok) o.detail = "threads 1/4/8 and a repeat run, " + std::to_string(outs[0].size()) + " bytes each";
  return o;
}

}  // namespace

int main() {
  criterion(1, "triangle fixture", 1, triangle_fixture);
  criterion(2, "one-round fixture", 1, one_round_fixture);
  criterion(3, "dp vs brute grid", 60, dp_grid);
  criterion(4, "subgraph count identity", 60, subgraph_identity);
  criterion(5, "pattern-tree recursion", 120, tree_recursion);
  criterion(6, "pattern-tree forward check", 300, forward_direction);
  criterion(7, "cycle-union family", 60, cycle_union_family);
  criterion(8, "cycle hierarchy", 30, cycle_hierarchy);
  criterion(9, "parity construction", 120, parity_construction);
  criterion(10, "join redundancy", 120, join_redundancy);
  criterion(11, "advisor golden cases", 10, advisor_goldens);
  criterion(12, "log-z normalization", 30, normalization);
  criterion(13, "treewidth golden values", 10, treewidth_goldens);
  criterion(14, "features determinism", 30, determinism);
  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
