#include "lgp/pattern_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lgp/isomorphism.hpp"
#include "lgp/wl.hpp"

namespace lgp {

std::size_t PatternTree::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth() + 1);
  return d;
}

std::size_t PatternTree::backbone_size() const {
  std::size_t s = 1;
  for (const auto& c : children) s += c.backbone_size();
  return s;
}

RootedPattern flatten(const PatternTree& t, const std::vector<RootedPattern>& f) {
  std::vector<LabelId> labels;
  std::vector<Edge> edges;
  std::function<Vertex(const PatternTree&)> place = [&](const PatternTree& node) {
    auto v = static_cast<Vertex>(labels.size());
    labels.push_back(node.label);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto& p = f[i];
      if (node.multiplicity(i) > 0 && p.root_label() != node.label)
        throw GraphError(GraphError::Kind::label_mismatch, "attachment",
                         "pattern '" + p.id() + "' cannot be attached at a vertex labelled differently");
      for (std::uint32_t copy = 0; copy < node.multiplicity(i); ++copy) {
        std::vector<Vertex> map(p.n());
        for (Vertex u = 0; u < p.n(); ++u) {
          if (u == p.root()) {
            map[u] = v;
          } else {
            map[u] = static_cast<Vertex>(labels.size());
            labels.push_back(p.graph().label(u));
          }
        }
        for (auto [a, b] : p.graph().edges()) edges.emplace_back(map[a], map[b]);
      }
    }
    for (const auto& c : node.children) edges.emplace_back(v, place(c));
    return v;
  };
  place(t);
  std::size_t n = labels.size();
  return {Graph("tree", n, std::move(labels), std::move(edges)), 0};
}

TreeEvaluator::TreeEvaluator(const Graph& g, const std::vector<RootedPattern>& f) : g_(g) {
  for (const auto& p : f) f_counts_.push_back(HomPlan(p).rooted_counts(g));
}

std::vector<Count> TreeEvaluator::counts(const PatternTree& t) const {
  const std::size_t n = g_.n();
  std::vector<Count> out(n, Count(0));
  for (Vertex v = 0; v < n; ++v)
    if (g_.label(v) == t.label) out[v] = 1;
  for (std::size_t i = 0; i < f_counts_.size(); ++i) {
    const auto s = t.multiplicity(i);
    if (s == 0) continue;
    for (Vertex v = 0; v < n; ++v)
      if (!out[v].is_zero()) out[v] *= pow(f_counts_[i][v], s);
  }
  for (const auto& c : t.children) {
    auto sub = counts(c);
    for (Vertex v = 0; v < n; ++v) {
      if (out[v].is_zero()) continue;
      Count sum = 0;
      for (Vertex u : g_.neighbors(v)) sum += sub[u];
      out[v] *= sum;
    }
  }
  return out;
}

CountVector hom_pattern_tree(const PatternTree& t, const std::vector<RootedPattern>& f, const Graph& g) {
  CountVector out{g.id(), "tree", true, {}, false};
  try {
    out.counts = TreeEvaluator(g, f).counts(t);
  } catch (const OverflowError&) {
    out.overflow = true;
  }
  return out;
}

namespace {

class Enumerator {
 public:
  Enumerator(const std::vector<RootedPattern>& f, const EnumerationBudget& b, const std::vector<LabelId>& labels)
      : f_(f), budget_(b) {
    for (LabelId l : labels) {
      std::vector<std::size_t> eligible;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].root_label() == l) eligible.push_back(i);
      std::vector<std::uint32_t> mult(f.size(), 0);
      std::vector<std::vector<std::uint32_t>> vectors;
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t left) {
        if (k == eligible.size()) {
          vectors.push_back(mult);
          return;
        }
        for (std::size_t s = 0; s <= left; ++s) {
          mult[eligible[k]] = static_cast<std::uint32_t>(s);
          rec(k + 1, left - s);
        }
        mult[eligible[k]] = 0;
      };
      rec(0, b.multiplicity);
      for (auto& v : vectors) {
        while (!v.empty() && v.back() == 0) v.pop_back();
      }
      heads_.push_back({l, std::move(vectors)});
    }
  }

  const std::vector<PatternTree>& trees(std::size_t depth, std::size_t size) {
    auto key = std::pair{depth, size};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<PatternTree> out;
    if (size >= 1) {
      const std::vector<PatternTree>* kids = nullptr;
      if (depth > 0 && size > 1) kids = &trees(depth - 1, size - 1);
      std::vector<std::size_t> kid_sizes;
      if (kids)
        for (const auto& k : *kids) kid_sizes.push_back(k.backbone_size());
      std::vector<std::vector<PatternTree>> child_sets;
      std::vector<PatternTree> chosen;
      std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t left) {
        child_sets.push_back(chosen);
        if (!kids) return;
        for (std::size_t i = from; i < kids->size(); ++i) {
          if (kid_sizes[i] > left) continue;
          if (child_sets.size() > budget_.max_trees) {
            truncated_ = true;
            return;
          }
          chosen.push_back((*kids)[i]);
          pick(i, left - kid_sizes[i]);
          chosen.pop_back();
        }
      };
      pick(0, size - 1);
      for (const auto& [label, vectors] : heads_)
        for (const auto& mult : vectors)
          for (const auto& cs : child_sets) {
            if (out.size() >= budget_.max_trees) {
              truncated_ = true;
              break;
            }
            out.push_back({label, mult, cs});
          }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  [[nodiscard]] bool truncated() const { return truncated_; }

 private:
  const std::vector<RootedPattern>& f_;
  EnumerationBudget budget_;
  std::vector<std::pair<LabelId, std::vector<std::vector<std::uint32_t>>>> heads_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<PatternTree>> memo_;
  bool truncated_ = false;
};

}  // namespace

TreeStream enumerate_pattern_trees(const std::vector<RootedPattern>& f, const EnumerationBudget& budget,
                                   const std::vector<LabelId>& labels) {
  Enumerator e(f, budget, labels);
  const auto& raw = e.trees(budget.depth, budget.backbone);
  struct Keyed {
    std::size_t n;
    std::string code;
    const PatternTree* tree;
  };
  std::vector<Keyed> keyed;
  std::set<std::string> seen;
  for (const auto& t : raw) {
    auto flat = flatten(t, f);
    auto code = canonical_code(flat);
    if (!seen.insert(code).second) continue;
    keyed.push_back({flat.n(), std::move(code), &t});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const Keyed& a, const Keyed& b) { return std::tie(a.n, a.code) < std::tie(b.n, b.code); });
  TreeStream out;
  out.truncated = e.truncated();
  out.trees.reserve(keyed.size());
  for (const auto& k : keyed) out.trees.push_back(*k.tree);
  return out;
}

nlohmann::json tree_json(const PatternTree& t, const std::vector<RootedPattern>& f) {
  nlohmann::json attach = nlohmann::json::object();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (t.multiplicity(i) > 0) attach[f[i].id()] = t.multiplicity(i);
  nlohmann::json children = nlohmann::json::array();
  for (const auto& c : t.children) children.push_back(tree_json(c, f));
  return {{"label", t.label}, {"attach", attach}, {"children", children}};
}

TreeCheckReport theorem1_check(const Graph& g, const Graph& h, const std::vector<RootedPattern>& f, std::size_t d,
                              const EnumerationBudget& budget, std::optional<std::pair<Vertex, Vertex>> anchors) {
  TreeCheckReport rep;
  Refinement ref = f_wl(g, h, f, std::max(d, g.n() + h.n()));
  Verdict verdict = anchors ? vertex_verdict(ref, anchors->first, anchors->second) : ref.verdict;
  if (verdict.distinguished && *verdict.round <= d) {
    rep.distinguished = true;
    rep.round = verdict.round;
  }
  std::set<LabelId> label_set(g.labels().begin(), g.labels().end());
  label_set.insert(h.labels().begin(), h.labels().end());
  EnumerationBudget b = budget;
  b.depth = std::min(b.depth, d);
  auto stream = enumerate_pattern_trees(f, b, {label_set.begin(), label_set.end()});
  rep.truncated = stream.truncated;
  TreeEvaluator eg(g, f);
  TreeEvaluator eh(h, f);
  rep.witness_searched = rep.distinguished;
  for (const auto& t : stream.trees) {
    const std::size_t depth = t.depth();
    auto cg = eg.counts(t);
    auto ch = eh.counts(t);
    ++rep.trees_checked;
    const auto& colg = ref.g.at(depth);
    const auto& colh = ref.h.at(depth);
    std::map<Color, Count> by_color;
    bool ok = true;
    auto check = [&](Color c, Count x) {
      auto [it, fresh] = by_color.emplace(c, x);
      if (!fresh && it->second != x) ok = false;
    };
    for (Vertex v = 0; v < g.n(); ++v) check(colg[v], cg[v]);
    for (Vertex v = 0; v < h.n(); ++v) check(colh[v], ch[v]);
    if (!ok) {
      if (rep.forward_violations++ == 0) rep.violation = t;
    }
    if (rep.witness_searched && !rep.witness) {
      Count a = 0;
      Count bsum = 0;
      if (anchors) {
        a = cg[anchors->first];
        bsum = ch[anchors->second];
      } else {
        for (auto c : cg) a += c;
        for (auto c : ch) bsum += c;
      }
      if (a != bsum) {
        rep.witness = t;
        rep.witness_g = a;
        rep.witness_h = bsum;
      }
    }
  }
  return rep;
}

nlohmann::json report_json(const TreeCheckReport& r, const std::vector<RootedPattern>& f) {
  nlohmann::json j{{"distinguished", r.distinguished},
                   {"trees_checked", r.trees_checked},
                   {"truncated", r.truncated},
                   {"forward_violations", r.forward_violations}};
  j["round"] = r.round ? nlohmann::json(*r.round) : nlohmann::json(nullptr);
  if (r.violation) j["violation"] = tree_json(*r.violation, f);
  if (!r.distinguished) {
    j["status"] = "equivalent";
  } else if (r.witness) {
    j["status"] = "witness";
    j["witness"] = tree_json(*r.witness, f);
    j["counts"] = {r.witness_g.str(), r.witness_h.str()};
  } else {
    j["status"] = "budget-exhausted";
  }
  return j;
}

}  // namespace lgp
