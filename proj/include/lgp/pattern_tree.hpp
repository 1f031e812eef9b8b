#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgp/count.hpp"
#include "lgp/graph.hpp"
#include "lgp/hom.hpp"

namespace lgp {

/// Backbone vertex with its label, how many copies of each pattern of F are
/// joined at it (mult[i] for F[i], missing entries are 0), and its children.
struct PatternTree {
  LabelId label = 0;
  std::vector<std::uint32_t> mult;
  std::vector<PatternTree> children;

  [[nodiscard]] std::size_t depth() const;
  [[nodiscard]] std::size_t backbone_size() const;
  [[nodiscard]] std::uint32_t multiplicity(std::size_t i) const { return i < mult.size() ? mult[i] : 0; }
  friend bool operator==(const PatternTree&, const PatternTree&) = default;
};

struct EnumerationBudget {
  std::size_t depth = 2;
  std::size_t backbone = 4;
  std::size_t multiplicity = 2;  // total attachments per backbone vertex
  std::size_t max_trees = 200'000;
};

/// Materializes every join; the backbone root becomes vertex 0 and the root.
/// Throws GraphError(label_mismatch) when an attachment's root label differs
/// from its backbone vertex.
RootedPattern flatten(const PatternTree& t, const std::vector<RootedPattern>& f);

/// Evaluates trees on one graph through
///   hom(T, G^v) = [labels agree] * prod_i hom(F_i, G^v)^{s_i}
///                 * prod_children sum_{u in N(v)} hom(child, G^u)
/// with the F counts computed once.
class TreeEvaluator {
 public:
  TreeEvaluator(const Graph& g, const std::vector<RootedPattern>& f);
  /// Throws OverflowError.
  [[nodiscard]] std::vector<Count> counts(const PatternTree& t) const;

 private:
  const Graph& g_;
  std::vector<std::vector<Count>> f_counts_;
};

CountVector hom_pattern_tree(const PatternTree& t, const std::vector<RootedPattern>& f, const Graph& g);

struct TreeStream {
  std::vector<PatternTree> trees;
  bool truncated = false;
};

/// Every tree within the budget once up to isomorphism of its flattening,
/// ordered by flattened vertex count and then by rooted canonical code.
/// Backbone labels range over `labels`.
TreeStream enumerate_pattern_trees(const std::vector<RootedPattern>& f, const EnumerationBudget& budget,
                                   const std::vector<LabelId>& labels = {0});

nlohmann::json tree_json(const PatternTree& t, const std::vector<RootedPattern>& f);

struct TreeCheckReport {
  bool distinguished = false;
  std::optional<std::size_t> round;
  std::size_t trees_checked = 0;
  bool truncated = false;
  std::size_t forward_violations = 0;
  std::optional<PatternTree> violation;
  bool witness_searched = false;
  std::optional<PatternTree> witness;
  Count witness_g{0};
  Count witness_h{0};
};

/// Forward direction: for every enumerated tree of depth t <= d, the rooted
/// counts are constant on every round-t F-WL color class of G and H
/// together. Witness: if F-WL separates within d rounds (the anchored
/// vertices when `anchors` is set, else the graphs) the stream is searched
/// for a tree of depth <= d whose counts differ (at the anchors, or summed
/// over all vertices).
TreeCheckReport theorem1_check(const Graph& g, const Graph& h, const std::vector<RootedPattern>& f, std::size_t d,
                              const EnumerationBudget& budget,
                              std::optional<std::pair<Vertex, Vertex>> anchors = std::nullopt);

nlohmann::json report_json(const TreeCheckReport& r, const std::vector<RootedPattern>& f);

}  // namespace lgp
