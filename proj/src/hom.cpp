#include "lgp/hom.hpp"

#include <algorithm>
#include <numeric>

#include "lgp/isomorphism.hpp"

namespace lgp {

namespace {

constexpr auto unmapped = static_cast<Vertex>(-1);

class BruteCounter {
 public:
  BruteCounter(const Graph& p, const Graph& g) : p_(p), g_(g), map_(p.n(), unmapped), mark_(p.n(), 0) {}

  Count count(std::optional<std::pair<Vertex, Vertex>> pin) {
    std::vector<Vertex> free;
    if (pin) {
      if (pin->second >= g_.n()) throw std::out_of_range("anchor out of range");
      if (p_.label(pin->first) != g_.label(pin->second)) return 0;
      map_[pin->first] = pin->second;
    }
    for (Vertex v = 0; v < p_.n(); ++v)
      if (map_[v] == unmapped) free.push_back(v);
    return extend(free);
  }

 private:
  Count extend(const std::vector<Vertex>& free) {
    if (free.empty()) return 1;
    ++stamp_;
    for (Vertex v : free) mark_[v] = stamp_;
    const auto in_free = stamp_;
    std::vector<std::vector<Vertex>> pieces;
    for (Vertex s : free) {
      if (mark_[s] != in_free) continue;
      pieces.emplace_back();
      auto& piece = pieces.back();
      mark_[s] = 0;
      piece.push_back(s);
      for (std::size_t i = 0; i < piece.size(); ++i)
        for (Vertex w : p_.neighbors(piece[i]))
          if (mark_[w] == in_free) {
            mark_[w] = 0;
            piece.push_back(w);
          }
    }
    Count total = 1;
    for (const auto& piece : pieces) {
      Count c = extend_piece(piece);
      if (c.is_zero()) return 0;
      total *= c;
    }
    return total;
  }

  bool fits(Vertex u, Vertex c) const {
    if (p_.label(u) != g_.label(c)) return false;
    for (Vertex x : p_.neighbors(u))
      if (map_[x] != unmapped && !g_.adjacent(c, map_[x])) return false;
    return true;
  }

  Count extend_piece(const std::vector<Vertex>& piece) {
    std::size_t pick = 0;
    std::size_t most = 0;
    for (std::size_t i = 0; i < piece.size(); ++i) {
      std::size_t k = 0;
      for (Vertex x : p_.neighbors(piece[i])) k += map_[x] != unmapped ? 1 : 0;
      if (k > most) {
        most = k;
        pick = i;
      }
    }
    Vertex u = piece[pick];
    std::vector<Vertex> rest;
    rest.reserve(piece.size() - 1);
    for (std::size_t i = 0; i < piece.size(); ++i)
      if (i != pick) rest.push_back(piece[i]);
    Count total = 0;
    auto attempt = [&](Vertex c) {
      if (!fits(u, c)) return;
      map_[u] = c;
      total += extend(rest);
      map_[u] = unmapped;
    };
    Vertex anchor = unmapped;
    for (Vertex x : p_.neighbors(u))
      if (map_[x] != unmapped) {
        anchor = map_[x];
        break;
      }
    if (anchor != unmapped) {
      for (Vertex c : g_.neighbors(anchor)) attempt(c);
    } else {
      for (Vertex c = 0; c < g_.n(); ++c) attempt(c);
    }
    return total;
  }

  const Graph& p_;
  const Graph& g_;
  std::vector<Vertex> map_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
};

}  // namespace

Count hom_count_brute(const Graph& p, const Graph& g) { return BruteCounter(p, g).count(std::nullopt); }

Count hom_count_brute(const RootedPattern& p, const Graph& g, Vertex anchor) {
  return BruteCounter(p.graph(), g).count(std::pair{p.root(), anchor});
}

HomPlan::HomPlan(const Graph& p) : p_(p), ntd_(nice_decomposition(p, decompose(p))) {}

HomPlan::HomPlan(const RootedPattern& p)
    : p_(p.graph()), root_(p.root()), ntd_(nice_decomposition(p.graph(), decompose(p.graph()), p.root())) {}

namespace {

// Sorts entries by key and sums the values of equal keys.
template <class Table>
void normalize(Table& t) {
  const std::size_t s = t.stride;
  const std::size_t k = t.size();
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto key = [&](std::size_t i) { return t.keys.begin() + static_cast<std::ptrdiff_t>(i * s); };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(key(a), key(a) + static_cast<std::ptrdiff_t>(s), key(b),
                                        key(b) + static_cast<std::ptrdiff_t>(s));
  });
  Table out;
  out.stride = s;
  for (std::size_t i : idx) {
    if (!out.values.empty() &&
        std::equal(key(i), key(i) + static_cast<std::ptrdiff_t>(s), out.keys.end() - static_cast<std::ptrdiff_t>(s))) {
      out.values.back() += t.values[i];
      continue;
    }
    out.keys.insert(out.keys.end(), key(i), key(i) + static_cast<std::ptrdiff_t>(s));
    out.values.push_back(t.values[i]);
  }
  t = std::move(out);
}

}  // namespace

HomPlan::Table HomPlan::run(const Graph& g, std::size_t upto) const {
  std::vector<std::optional<Table>> tables(upto + 1);
  for (std::size_t i = 0; i <= upto; ++i) {
    const NiceNode& nd = ntd_.nodes[i];
    Table t;
    t.stride = nd.bag.size();
    switch (nd.kind) {
      case NiceKind::leaf:
        t.values.push_back(1);
        break;
      case NiceKind::introduce: {
        Table child = std::move(*tables[nd.children[0]]);
        tables[nd.children[0]].reset();
        const Vertex v = nd.vertex;
        const auto p = static_cast<std::size_t>(std::find(nd.bag.begin(), nd.bag.end(), v) - nd.bag.begin());
        std::vector<std::size_t> linked;  // positions in the child key
        for (std::size_t j = 0; j < nd.bag.size(); ++j)
          if (j != p && p_.adjacent(v, nd.bag[j])) linked.push_back(j < p ? j : j - 1);
        const std::size_t cs = child.stride;
        for (std::size_t e = 0; e < child.size(); ++e) {
          const Vertex* key = child.keys.data() + e * cs;
          auto emit = [&](Vertex c) {
            if (g.label(c) != p_.label(v)) return;
            for (std::size_t j : linked)
              if (!g.adjacent(c, key[j])) return;
            t.keys.insert(t.keys.end(), key, key + p);
            t.keys.push_back(c);
            t.keys.insert(t.keys.end(), key + p, key + cs);
            t.values.push_back(child.values[e]);
          };
          if (!linked.empty()) {
            for (Vertex c : g.neighbors(key[linked[0]])) emit(c);
          } else {
            for (Vertex c = 0; c < g.n(); ++c) emit(c);
          }
        }
        normalize(t);
        break;
      }
      case NiceKind::forget: {
        Table child = std::move(*tables[nd.children[0]]);
        tables[nd.children[0]].reset();
        const auto& cb = ntd_.nodes[nd.children[0]].bag;
        const auto p = static_cast<std::size_t>(std::find(cb.begin(), cb.end(), nd.vertex) - cb.begin());
        const std::size_t cs = child.stride;
        for (std::size_t e = 0; e < child.size(); ++e) {
          const Vertex* key = child.keys.data() + e * cs;
          t.keys.insert(t.keys.end(), key, key + p);
          t.keys.insert(t.keys.end(), key + p + 1, key + cs);
          t.values.push_back(child.values[e]);
        }
        normalize(t);
        break;
      }
      case NiceKind::join: {
        Table a = std::move(*tables[nd.children[0]]);
        Table b = std::move(*tables[nd.children[1]]);
        tables[nd.children[0]].reset();
        tables[nd.children[1]].reset();
        const std::size_t s = t.stride;
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.size() && j < b.size()) {
          const Vertex* ka = a.keys.data() + i * s;
          const Vertex* kb = b.keys.data() + j * s;
          if (std::lexicographical_compare(ka, ka + s, kb, kb + s)) {
            ++i;
          } else if (std::lexicographical_compare(kb, kb + s, ka, ka + s)) {
            ++j;
          } else {
            t.keys.insert(t.keys.end(), ka, ka + s);
            t.values.push_back(a.values[i] * b.values[j]);
            ++i;
            ++j;
          }
        }
        break;
      }
    }
    tables[i] = std::move(t);
  }
  return std::move(*tables[upto]);
}

std::vector<Count> HomPlan::rooted_counts(const Graph& g) const {
  if (!root_) throw std::logic_error("rooted_counts on an unrooted plan");
  std::size_t before = ntd_.nodes[ntd_.root()].children.at(0);
  Table t = run(g, before);
  std::vector<Count> out(g.n(), Count(0));
  for (std::size_t e = 0; e < t.size(); ++e) out[t.keys[e]] = t.values[e];
  return out;
}

Count HomPlan::count(const Graph& g) const {
  Table t = run(g, ntd_.root());
  return t.values.empty() ? Count(0) : t.values[0];
}

CountVector hom_count_dp(const RootedPattern& p, const Graph& g) {
  CountVector out{g.id(), p.id(), true, {}, false};
  try {
    out.counts = HomPlan(p).rooted_counts(g);
  } catch (const OverflowError&) {
    out.overflow = true;
  }
  return out;
}

CountVector hom_count_dp(const Graph& p, const Graph& g) {
  CountVector out{g.id(), p.id(), false, {}, false};
  try {
    out.counts = {HomPlan(p).count(g)};
  } catch (const OverflowError&) {
    out.overflow = true;
  }
  return out;
}

PatternCounter::PatternCounter(RootedPattern p, CountMode mode) : p_(std::move(p)), mode_(mode) {
  if (mode_ == CountMode::hom) {
    plans_.emplace_back(p_);
    return;
  }
  for (auto& wp : injective_expansion(p_)) {
    plans_.emplace_back(wp.pattern);
    weights_.push_back(wp.weight);
  }
  aut_ = Count(static_cast<std::int64_t>(automorphism_count(p_)));
}

std::vector<Count> PatternCounter::counts(const Graph& g) const {
  if (mode_ == CountMode::hom) return plans_[0].rooted_counts(g);
  std::vector<Count> inj(g.n(), Count(0));
  for (std::size_t i = 0; i < plans_.size(); ++i) {
    auto h = plans_[i].rooted_counts(g);
    for (Vertex v = 0; v < g.n(); ++v) inj[v] += weights_[i] * h[v];
  }
  for (auto& c : inj) c = c.exact_div(aut_);
  return inj;
}

std::vector<Count> inj_counts(const RootedPattern& p, const Graph& g) {
  std::vector<Count> inj(g.n(), Count(0));
  for (auto& wp : injective_expansion(p)) {
    auto h = HomPlan(wp.pattern).rooted_counts(g);
    for (Vertex v = 0; v < g.n(); ++v) inj[v] += wp.weight * h[v];
  }
  return inj;
}

std::vector<Count> sub_counts(const RootedPattern& p, const Graph& g) {
  return PatternCounter(p, CountMode::sub).counts(g);
}

Count inj_count(const RootedPattern& p, const Graph& g, Vertex anchor) { return inj_counts(p, g).at(anchor); }

Count sub_count(const RootedPattern& p, const Graph& g, Vertex anchor) { return sub_counts(p, g).at(anchor); }

GraphFeatures hom_vector(const std::vector<PatternCounter>& counters, const Graph& g) {
  GraphFeatures out;
  out.graph_id = g.id();
  out.n = g.n();
  out.labels = g.labels();
  for (const auto& c : counters) {
    try {
      out.columns.push_back(c.counts(g));
      out.overflow.push_back(false);
    } catch (const OverflowError&) {
      out.columns.emplace_back(g.n(), Count(0));
      out.overflow.push_back(true);
    }
  }
  return out;
}

GraphFeatures hom_vector(const std::vector<RootedPattern>& patterns, const Graph& g, CountMode mode) {
  std::vector<PatternCounter> counters;
  counters.reserve(patterns.size());
  for (const auto& p : patterns) counters.emplace_back(p, mode);
  return hom_vector(counters, g);
}

std::string_view mode_name(CountMode m) { return m == CountMode::hom ? "hom" : "sub"; }

}  // namespace lgp
