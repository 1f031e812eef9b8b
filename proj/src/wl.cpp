#include "lgp/wl.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "lgp/errors.hpp"
#include "lgp/hom.hpp"

namespace lgp {

std::vector<std::vector<Vertex>> Coloring::classes(std::size_t d) const {
  const auto& c = at(d);
  std::map<Color, std::vector<Vertex>> by;
  for (Vertex v = 0; v < c.size(); ++v) by[c[v]].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [col, vs] : by) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Replaces each key by its rank among the distinct keys of both sides.
template <class Key>
std::size_t assign_ids(const std::vector<Key>& a, const std::vector<Key>& b, std::vector<Color>& out_a,
                       std::vector<Color>& out_b) {
  std::vector<const Key*> all;
  all.reserve(a.size() + b.size());
  for (const auto& k : a) all.push_back(&k);
  for (const auto& k : b) all.push_back(&k);
  std::sort(all.begin(), all.end(), [](const Key* x, const Key* y) { return *x < *y; });
  all.erase(std::unique(all.begin(), all.end(), [](const Key* x, const Key* y) { return *x == *y; }), all.end());
  auto id = [&](const Key& k) {
    return static_cast<Color>(
        std::lower_bound(all.begin(), all.end(), &k, [](const Key* x, const Key* y) { return *x < *y; }) -
        all.begin());
  };
  out_a.resize(a.size());
  out_b.resize(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) out_a[i] = id(a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) out_b[i] = id(b[i]);
  return all.size();
}

// Empty when the two color multisets agree.
std::optional<std::string> multiset_difference(std::vector<Color> a, std::vector<Color> b) {
  if (a.size() != b.size())
    return "size " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a == b) return std::nullopt;
  std::map<Color, std::pair<std::size_t, std::size_t>> mult;
  for (Color c : a) ++mult[c].first;
  for (Color c : b) ++mult[c].second;
  for (auto [c, m] : mult)
    if (m.first != m.second)
      return "color " + std::to_string(c) + ": " + std::to_string(m.first) + " vs " + std::to_string(m.second);
  return std::nullopt;
}

Verdict compare_rounds(const std::vector<std::vector<Color>>& hg, const std::vector<std::vector<Color>>& hh) {
  for (std::size_t d = 0; d < hg.size(); ++d)
    if (auto diff = multiset_difference(hg[d], hh[d])) return {true, d, *diff};
  return {};
}

}  // namespace

Refinement wl_refine(const Graph& g, const Graph& h, const std::vector<std::string>& init_g,
                     const std::vector<std::string>& init_h, std::optional<std::size_t> max_rounds) {
  if (init_g.size() != g.n() || init_h.size() != h.n())
    throw std::invalid_argument("initial keys must cover every vertex");
  const std::size_t limit = max_rounds.value_or(g.n() + h.n());
  Refinement r;
  std::vector<Color> cg;
  std::vector<Color> ch;
  std::size_t classes = assign_ids(init_g, init_h, cg, ch);
  r.g.history.push_back(cg);
  r.h.history.push_back(ch);
  for (std::size_t d = 1; d <= limit; ++d) {
    auto keys = [](const Graph& x, const std::vector<Color>& c) {
      std::vector<std::vector<Color>> out(x.n());
      for (Vertex v = 0; v < x.n(); ++v) {
        auto& k = out[v];
        k.push_back(c[v]);
        for (Vertex w : x.neighbors(v)) k.push_back(c[w]);
        std::sort(k.begin() + 1, k.end());
      }
      return out;
    };
    std::vector<Color> ng;
    std::vector<Color> nh;
    std::size_t next = assign_ids(keys(g, cg), keys(h, ch), ng, nh);
    if (next == classes) break;
    classes = next;
    cg = std::move(ng);
    ch = std::move(nh);
    r.g.history.push_back(cg);
    r.h.history.push_back(ch);
    r.stable_round = d;
  }
  r.verdict = compare_rounds(r.g.history, r.h.history);
  return r;
}

Refinement wl_refine(const Graph& g, const Graph& h, std::optional<std::size_t> max_rounds) {
  auto labels = [](const Graph& x) {
    std::vector<std::string> out;
    for (LabelId l : x.labels()) out.push_back(std::to_string(l));
    return out;
  };
  return wl_refine(g, h, labels(g), labels(h), max_rounds);
}

std::vector<std::string> hom_keys(const Graph& g, const std::vector<RootedPattern>& patterns) {
  std::vector<std::string> keys;
  for (LabelId l : g.labels()) keys.push_back(std::to_string(l));
  for (const auto& p : patterns) {
    auto counts = HomPlan(p).rooted_counts(g);
    for (Vertex v = 0; v < g.n(); ++v) keys[v] += "|" + counts[v].str();
  }
  return keys;
}

Refinement f_wl(const Graph& g, const Graph& h, const std::vector<RootedPattern>& patterns,
                std::optional<std::size_t> max_rounds) {
  return wl_refine(g, h, hom_keys(g, patterns), hom_keys(h, patterns), max_rounds);
}

Verdict vertex_verdict(const Refinement& r, Vertex v, Vertex w) {
  const std::size_t rounds = std::max(r.g.rounds(), r.h.rounds());
  for (std::size_t d = 0; d < rounds; ++d) {
    Color a = r.g.at(d)[v];
    Color b = r.h.at(d)[w];
    if (a != b) return {true, d, "color " + std::to_string(a) + " vs " + std::to_string(b)};
  }
  return {};
}

namespace {

class TupleSpace {
 public:
  TupleSpace(const Graph& g, unsigned k) : g_(g), k_(k) {
    size_ = 1;
    for (unsigned i = 0; i < k; ++i) size_ *= g.n();
    pow_.resize(k);
    std::size_t p = 1;
    for (unsigned i = k; i-- > 0;) {
      pow_[i] = p;
      p *= g.n();
    }
  }

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] Vertex entry(std::size_t t, unsigned i) const { return static_cast<Vertex>((t / pow_[i]) % g_.n()); }
  [[nodiscard]] std::size_t replaced(std::size_t t, unsigned i, Vertex w) const {
    return t - entry(t, i) * pow_[i] + w * pow_[i];
  }

  [[nodiscard]] std::vector<Color> isotype(std::size_t t) const {
    std::vector<Color> key;
    for (unsigned i = 0; i < k_; ++i) key.push_back(g_.label(entry(t, i)));
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = i + 1; j < k_; ++j) {
        Vertex a = entry(t, i);
        Vertex b = entry(t, j);
        key.push_back(a == b ? 2 : (g_.adjacent(a, b) ? 1 : 0));
      }
    return key;
  }

  // Old color followed by the sorted multiset over w of the colors of the
  // k tuples obtained by substituting w at each position. For k = 1 the
  // isomorphism type of (v, w) is part of each entry.
  [[nodiscard]] std::vector<Color> update_key(std::size_t t, const std::vector<Color>& c) const {
    const std::size_t width = k_ == 1 ? 2 : k_;
    std::vector<std::array<Color, 3>> entries(g_.n());
    for (Vertex w = 0; w < g_.n(); ++w) {
      auto& e = entries[w];
      e = {0, 0, 0};
      if (k_ == 1) {
        Vertex v = entry(t, 0);
        e[0] = c[w];
        e[1] = v == w ? 2 : (g_.adjacent(v, w) ? 1 : 0);
      } else {
        for (unsigned i = 0; i < k_; ++i) e[i] = c[replaced(t, i, w)];
      }
    }
    std::sort(entries.begin(), entries.end());
    std::vector<Color> key;
    key.reserve(1 + width * entries.size());
    key.push_back(c[t]);
    for (const auto& e : entries) key.insert(key.end(), e.begin(), e.begin() + static_cast<std::ptrdiff_t>(width));
    return key;
  }

 private:
  const Graph& g_;
  unsigned k_;
  std::size_t size_;
  std::vector<std::size_t> pow_;
};

}  // namespace

Verdict k_wl(const Graph& g, const Graph& h, unsigned k, std::optional<std::size_t> max_rounds) {
  if (k < 1 || k > 3) throw std::invalid_argument("k-WL supports k in {1,2,3}, got " + std::to_string(k));
  auto tuples = [k](std::size_t n) {
    std::uint64_t t = 1;
    for (unsigned i = 0; i < k; ++i) t *= n;
    return t;
  };
  if (tuples(g.n()) + tuples(h.n()) > k_wl_tuple_limit)
    throw GuardError("k-WL with k=" + std::to_string(k) + " needs " + std::to_string(tuples(g.n()) + tuples(h.n())) +
                     " tuples; limit is " + std::to_string(k_wl_tuple_limit));
  TupleSpace sg(g, k);
  TupleSpace sh(h, k);
  const std::size_t limit = max_rounds.value_or(sg.size() + sh.size());
  auto init = [](const TupleSpace& s) {
    std::vector<std::vector<Color>> keys(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) keys[t] = s.isotype(t);
    return keys;
  };
  std::vector<Color> cg;
  std::vector<Color> ch;
  std::size_t classes = assign_ids(init(sg), init(sh), cg, ch);
  std::vector<std::vector<Color>> hg{cg};
  std::vector<std::vector<Color>> hh{ch};
  for (std::size_t d = 1; d <= limit; ++d) {
    auto keys = [](const TupleSpace& s, const std::vector<Color>& c) {
      std::vector<std::vector<Color>> out(s.size());
      for (std::size_t t = 0; t < s.size(); ++t) out[t] = s.update_key(t, c);
      return out;
    };
    std::vector<Color> ng;
    std::vector<Color> nh;
    std::size_t next = assign_ids(keys(sg, cg), keys(sh, ch), ng, nh);
    if (next == classes) break;
    classes = next;
    cg = std::move(ng);
    ch = std::move(nh);
    hg.push_back(cg);
    hh.push_back(ch);
  }
  return compare_rounds(hg, hh);
}

std::vector<std::vector<Verdict>> distinguishability_matrix(const std::vector<Graph>& graphs,
                                                            const std::vector<RootedPattern>& patterns) {
  const std::size_t n = graphs.size();
  std::vector<std::vector<Verdict>> out(n, std::vector<Verdict>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      out[i][j] = f_wl(graphs[i], graphs[j], patterns).verdict;
      out[j][i] = out[i][j];
    }
  return out;
}

nlohmann::json verdict_json(const Verdict& v, const std::string& a, const std::string& b) {
  nlohmann::json j{{"pair", {a, b}}, {"distinguished", v.distinguished}};
  j["round"] = v.round ? nlohmann::json(*v.round) : nlohmann::json(nullptr);
  if (v.distinguished) j["witness"] = v.witness;
  return j;
}

}  // namespace lgp
