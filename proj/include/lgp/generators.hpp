#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lgp/graph.hpp"

namespace lgp {

struct MarkedGraph {
  Graph graph;
  nlohmann::json meta;
};

using MarkedPair = std::pair<MarkedGraph, MarkedGraph>;

/// Two triangles joined by an edge versus a hexagon with one long chord; both
/// 1-WL-equivalent. meta.marked is the vertex where the triangle count differs.
MarkedPair fig1_pair();
/// The 9-vertex pair separated by {K3}-WL after one round; meta.marked
/// holds v in the first graph and w in the second.
MarkedPair fig2_pair();

/// (m+2) copies of C_{m+1} versus (m+1) copies of C_{m+2}. Requires m >= 3.
MarkedPair cycle_union_pair(std::size_t m);
/// k copies of C_{k+1} versus k+1 copies of C_k. Requires k >= 4.
MarkedPair cycle_hierarchy_pair(std::size_t k);

struct CfiPair {
  MarkedGraph twisted;
  MarkedGraph untwisted;
  Vertex v1 = 0;
  /// Pattern vertex each generated vertex sits over (same for both graphs).
  std::vector<Vertex> base;
};

/// Parity gadgets over the pattern: one vertex per (v, f) with f assigning a
/// bit to every edge at v, the bits summing to 1 at v1 in the twisted graph
/// and to 0 everywhere else. (v,f) ~ (v',f') iff vv' is an edge and f, f'
/// agree on it. v1 defaults to the root and needs degree >= 2.
CfiPair cfi_pair(const RootedPattern& p, std::optional<Vertex> v1 = std::nullopt);

}  // namespace lgp
