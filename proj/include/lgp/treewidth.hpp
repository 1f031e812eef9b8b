#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgp/graph.hpp"

namespace lgp {

inline constexpr std::size_t npos_node = static_cast<std::size_t>(-1);

/// Tree of bags given by parent links; the single root has parent npos_node.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;  // each sorted
  std::vector<std::size_t> parent;
  int width = -1;

  [[nodiscard]] std::size_t size() const { return bags.size(); }
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> tree_edges() const;
};

/// Empty when `td` is a valid decomposition of `g` with a correct width
/// field, otherwise a description of the first violated condition.
std::optional<std::string> validate(const Graph& g, const TreeDecomposition& td);

nlohmann::json to_json(const TreeDecomposition& td);

/// Decomposition induced by eliminating vertices in `order` (a permutation).
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);

inline constexpr std::size_t treewidth_vertex_limit = 14;

struct TreewidthResult {
  int width;
  TreeDecomposition decomposition;
};

/// Exact treewidth by dynamic programming over vertex subsets.
/// Throws GuardError above treewidth_vertex_limit vertices.
TreewidthResult treewidth(const Graph& g);

/// Exact decomposition when within the guard, greedy min-fill otherwise.
TreeDecomposition decompose(const Graph& g);

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
  NiceKind kind;
  Vertex vertex = 0;                  // introduce / forget
  std::vector<std::size_t> children;  // 0, 1 or 2
  std::vector<Vertex> bag;            // sorted
};

/// Children always precede their parents; the root is the last node.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int width = -1;

  [[nodiscard]] std::size_t root() const { return nodes.size() - 1; }
};

/// Nice form of `td`. When `last` is given, every other vertex is forgotten
/// before it, so the root's only child has bag {last}.
NiceTreeDecomposition nice_decomposition(const Graph& g, const TreeDecomposition& td,
                                         std::optional<Vertex> last = std::nullopt);

std::optional<std::string> validate(const Graph& g, const NiceTreeDecomposition& ntd);

}  // namespace lgp
