#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgp/count.hpp"
#include "lgp/graph.hpp"
#include "lgp/pattern_algebra.hpp"
#include "lgp/treewidth.hpp"

namespace lgp {

/// Counts of one pattern in one graph: per vertex when rooted, a single
/// scalar otherwise. When `overflow` is set the counts are meaningless.
struct CountVector {
  std::string graph_id;
  std::string pattern_id;
  bool rooted = true;
  std::vector<Count> counts;
  bool overflow = false;

  [[nodiscard]] Count scalar() const { return counts.at(0); }
};

/// Backtracking enumeration; splits the unassigned part of the pattern into
/// connected pieces and multiplies their extension counts.
Count hom_count_brute(const Graph& p, const Graph& g);
Count hom_count_brute(const RootedPattern& p, const Graph& g, Vertex anchor);

/// Dynamic programming over a nice tree decomposition of a fixed pattern.
/// Tables map bag assignments (lexicographically sorted) to counts.
class HomPlan {
 public:
  explicit HomPlan(const Graph& p);
  explicit HomPlan(const RootedPattern& p);

  [[nodiscard]] bool rooted() const { return root_.has_value(); }
  [[nodiscard]] const Graph& pattern() const { return p_; }
  [[nodiscard]] const NiceTreeDecomposition& decomposition() const { return ntd_; }

  /// hom(P^r, G^v) for every v. Throws OverflowError.
  [[nodiscard]] std::vector<Count> rooted_counts(const Graph& g) const;
  /// hom(P, G). Throws OverflowError.
  [[nodiscard]] Count count(const Graph& g) const;

 private:
  struct Table {
    std::size_t stride = 0;
    std::vector<Vertex> keys;
    std::vector<Count> values;
    [[nodiscard]] std::size_t size() const { return values.size(); }
  };
  [[nodiscard]] Table run(const Graph& g, std::size_t upto) const;

  Graph p_;
  std::optional<Vertex> root_;
  NiceTreeDecomposition ntd_;
};

CountVector hom_count_dp(const RootedPattern& p, const Graph& g);
CountVector hom_count_dp(const Graph& p, const Graph& g);

/// Injective homomorphisms with root -> anchor, by Moebius inversion over
/// the spasm. Throws GuardError past the spasm limit, OverflowError.
Count inj_count(const RootedPattern& p, const Graph& g, Vertex anchor);
/// Subgraphs of g containing `anchor` at the root position that are
/// isomorphic to p: inj / rooted automorphisms.
Count sub_count(const RootedPattern& p, const Graph& g, Vertex anchor);

enum class CountMode { hom, sub };

/// Precomputed counting plan for one pattern; reusable across graphs and
/// safe to share between threads.
class PatternCounter {
 public:
  PatternCounter(RootedPattern p, CountMode mode);

  [[nodiscard]] const RootedPattern& pattern() const { return p_; }
  [[nodiscard]] CountMode mode() const { return mode_; }

  /// Per-vertex counts. Throws OverflowError.
  [[nodiscard]] std::vector<Count> counts(const Graph& g) const;

 private:
  RootedPattern p_;
  CountMode mode_;
  std::vector<HomPlan> plans_;
  std::vector<Count> weights_;
  Count aut_{1};
};

/// All inj/sub counts at every vertex.
std::vector<Count> inj_counts(const RootedPattern& p, const Graph& g);
std::vector<Count> sub_counts(const RootedPattern& p, const Graph& g);

/// Feature rows of one graph: one column per pattern, in pattern order.
struct GraphFeatures {
  std::string graph_id;
  std::size_t n = 0;
  std::vector<LabelId> labels;
  std::vector<std::vector<Count>> columns;
  std::vector<bool> overflow;  // per column
};

struct FeatureMatrix {
  std::vector<std::string> pattern_ids;
  CountMode mode = CountMode::hom;
  std::vector<GraphFeatures> graphs;
};

GraphFeatures hom_vector(const std::vector<PatternCounter>& counters, const Graph& g);
GraphFeatures hom_vector(const std::vector<RootedPattern>& patterns, const Graph& g, CountMode mode);

std::string_view mode_name(CountMode m);

}  // namespace lgp
