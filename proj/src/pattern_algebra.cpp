#include "lgp/pattern_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lgp/errors.hpp"
#include "lgp/isomorphism.hpp"

namespace lgp {

std::size_t Partition::block_count() const {
  return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
}

bool Partition::valid() const {
  std::size_t next = 0;
  for (auto b : block) {
    if (b > next) return false;
    if (b == next) ++next;
  }
  return true;
}

Partition Partition::discrete(std::size_t n) {
  Partition p;
  p.block.resize(n);
  std::iota(p.block.begin(), p.block.end(), std::size_t{0});
  return p;
}

void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& f) {
  Partition p;
  p.block.assign(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      f(p);
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      p.block[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  rec(0, 0);
}

RootedPattern join(const RootedPattern& p, const RootedPattern& q) {
  if (p.root_label() != q.root_label())
    throw GraphError(GraphError::Kind::label_mismatch, "root",
                     "cannot join '" + p.id() + "' and '" + q.id() + "': root labels differ");
  const Graph& a = p.graph();
  const Graph& b = q.graph();
  std::vector<Vertex> map(b.n());
  std::vector<LabelId> labels = a.labels();
  auto next = static_cast<Vertex>(a.n());
  for (Vertex v = 0; v < b.n(); ++v) {
    if (v == q.root()) {
      map[v] = p.root();
    } else {
      map[v] = next++;
      labels.push_back(b.label(v));
    }
  }
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(map[u], map[v]);
  const std::size_t n = labels.size();
  return {Graph(p.id() + "*" + q.id(), n, std::move(labels), std::move(edges)), p.root()};
}

std::optional<Graph> quotient(const Graph& p, const Partition& part) {
  const std::size_t k = part.block_count();
  std::vector<std::optional<LabelId>> labels(k);
  for (Vertex v = 0; v < p.n(); ++v) {
    auto& l = labels[part.block[v]];
    if (l && *l != p.label(v)) return std::nullopt;
    l = p.label(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : p.edges()) {
    auto bu = static_cast<Vertex>(part.block[u]);
    auto bv = static_cast<Vertex>(part.block[v]);
    if (bu == bv) return std::nullopt;
    edges.emplace_back(std::min(bu, bv), std::max(bu, bv));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<LabelId> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = *labels[i];
  return Graph(p.id(), k, std::move(out), std::move(edges));
}

namespace {

void guard_spasm(const RootedPattern& p) {
  if (p.n() > spasm_vertex_limit)
    throw GuardError("pattern '" + p.id() + "' has " + std::to_string(p.n()) +
                     " vertices; spasm enumeration is limited to " + std::to_string(spasm_vertex_limit));
}

Count moebius_weight(const Partition& part) {
  std::vector<std::int64_t> sizes(part.block_count(), 0);
  for (auto b : part.block) ++sizes[b];
  Count w(1);
  for (auto s : sizes) {
    Count f(1);
    for (std::int64_t i = 2; i < s; ++i) f *= Count(i);
    w *= (s % 2 == 1) ? f : Count(0) - f;
  }
  return w;
}

}  // namespace

std::vector<RootedPattern> spasm(const RootedPattern& p) {
  guard_spasm(p);
  std::map<std::string, RootedPattern> found;
  for_each_partition(p.n(), [&](const Partition& part) {
    auto q = quotient(p.graph(), part);
    if (!q) return;
    RootedPattern rq(std::move(*q), static_cast<Vertex>(part.block[p.root()]));
    auto code = canonical_code(rq);
    found.try_emplace(std::move(code), std::move(rq));
  });
  std::vector<RootedPattern> out;
  std::size_t i = 0;
  for (auto& [code, q] : found) out.push_back(q.renamed(p.id() + "/q" + std::to_string(i++)));
  return out;
}

std::vector<WeightedPattern> injective_expansion(const RootedPattern& p) {
  guard_spasm(p);
  std::map<std::string, WeightedPattern> acc;
  for_each_partition(p.n(), [&](const Partition& part) {
    auto q = quotient(p.graph(), part);
    if (!q) return;
    RootedPattern rq(std::move(*q), static_cast<Vertex>(part.block[p.root()]));
    auto code = canonical_code(rq);
    auto w = moebius_weight(part);
    auto it = acc.find(code);
    if (it == acc.end())
      acc.emplace(std::move(code), WeightedPattern{std::move(rq), w});
    else
      it->second.weight += w;
  });
  std::vector<WeightedPattern> out;
  std::size_t i = 0;
  for (auto& [code, wp] : acc) {
    if (wp.weight.is_zero()) continue;
    out.push_back({wp.pattern.renamed(p.id() + "/q" + std::to_string(i++)), wp.weight});
  }
  return out;
}

namespace {

class ExistsSearch {
 public:
  ExistsSearch(const Graph& from, const Graph& to) : from_(from), to_(to), map_(from.n(), unmapped) {}

  bool run(std::optional<std::pair<Vertex, Vertex>> pin) {
    std::vector<bool> seen(from_.n(), false);
    auto bfs = [&](Vertex s) {
      std::size_t head = order_.size();
      seen[s] = true;
      order_.push_back(s);
      while (head < order_.size()) {
        Vertex u = order_[head++];
        for (Vertex w : from_.neighbors(u))
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
      }
    };
    if (pin) {
      if (from_.label(pin->first) != to_.label(pin->second)) return false;
      bfs(pin->first);
      pinned_ = pin->second;
    }
    for (Vertex v = 0; v < from_.n(); ++v)
      if (!seen[v]) bfs(v);
    return extend(0);
  }

 private:
  static constexpr Vertex unmapped = static_cast<Vertex>(-1);

  bool ok(Vertex u, Vertex c) const {
    if (from_.label(u) != to_.label(c)) return false;
    for (Vertex x : from_.neighbors(u))
      if (map_[x] != unmapped && !to_.adjacent(c, map_[x])) return false;
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex u = order_[depth];
    auto attempt = [&](Vertex c) {
      if (!ok(u, c)) return false;
      map_[u] = c;
      bool r = extend(depth + 1);
      map_[u] = unmapped;
      return r;
    };
    if (depth == 0 && pinned_) return attempt(*pinned_);
    for (Vertex x : from_.neighbors(u))
      if (map_[x] != unmapped) {
        for (Vertex c : to_.neighbors(map_[x]))
          if (attempt(c)) return true;
        return false;
      }
    for (Vertex c = 0; c < to_.n(); ++c)
      if (attempt(c)) return true;
    return false;
  }

  const Graph& from_;
  const Graph& to_;
  std::vector<Vertex> map_;
  std::vector<Vertex> order_;
  std::optional<Vertex> pinned_;
};

// Minimum-size vertex subset S with a homomorphism g -> g[S].
std::vector<Vertex> core_support(const Graph& g) {
  const std::size_t n = g.n();
  for (std::size_t s = 1; s <= n; ++s) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
      std::vector<Vertex> subset;
      for (Vertex v = 0; v < n; ++v)
        if (pick[v]) subset.push_back(v);
      if (s == n || hom_exists(g, g.induced(subset))) return subset;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {};
}

}  // namespace

bool hom_exists(const Graph& from, const Graph& to, std::optional<std::pair<Vertex, Vertex>> pin) {
  return ExistsSearch(from, to).run(pin);
}

RootedPattern core_of(const RootedPattern& p) {
  auto support = core_support(p.graph());
  Graph core = p.graph().induced(support).renamed("core(" + p.id() + ")");
  std::optional<RootedPattern> best;
  std::string best_code;
  for (Vertex c = 0; c < core.n(); ++c) {
    if (!hom_exists(p.graph(), core, std::pair{p.root(), c})) continue;
    RootedPattern cand(core, c);
    auto code = canonical_code(cand);
    if (!best || code < best_code) {
      best = std::move(cand);
      best_code = std::move(code);
    }
  }
  return *best;
}

bool is_core(const Graph& g) { return core_support(g).size() == g.n(); }

std::vector<RootedPattern> join_factors(const RootedPattern& p) {
  const Graph& g = p.graph();
  const Vertex r = p.root();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.n(), unset);
  std::size_t count = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (s == r || comp[s] != unset) continue;
    std::vector<Vertex> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (w != r && comp[w] == unset) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  if (count < 2) return {p};
  std::vector<RootedPattern> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Vertex> keep{r};
    for (Vertex v = 0; v < g.n(); ++v)
      if (v != r && comp[v] == c) keep.push_back(v);
    out.emplace_back(g.induced(keep).renamed(p.id() + "#" + std::to_string(c)), 0);
  }
  return out;
}

std::optional<std::pair<RootedPattern, RootedPattern>> is_join_decomposable(const RootedPattern& p) {
  auto factors = join_factors(p);
  if (factors.size() < 2) return std::nullopt;
  RootedPattern rest = factors[1];
  for (std::size_t i = 2; i < factors.size(); ++i) rest = join(rest, factors[i]);
  return std::pair{factors[0], rest.renamed(p.id() + "#rest")};
}

}  // namespace lgp
