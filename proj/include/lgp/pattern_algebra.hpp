#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lgp/count.hpp"
#include "lgp/graph.hpp"

namespace lgp {

/// Block assignment per vertex, normalized so block ids appear in order of
/// first occurrence (a restricted growth string).
struct Partition {
  std::vector<std::size_t> block;

  [[nodiscard]] std::size_t block_count() const;
  [[nodiscard]] bool valid() const;
  static Partition discrete(std::size_t n);
};

/// Calls `f` for every set partition of {0..n-1} (Bell(n) of them).
void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& f);

inline constexpr std::size_t spasm_vertex_limit = 9;

/// Disjoint union with the roots identified; the result is rooted there.
/// Vertices of `p` keep their ids, non-root vertices of `q` follow in order.
/// Throws GraphError(label_mismatch) if the roots carry different labels.
RootedPattern join(const RootedPattern& p, const RootedPattern& q);

/// One vertex per block, an edge between blocks iff some cross-block edge.
/// Absent when a block contains an edge or mixes labels.
std::optional<Graph> quotient(const Graph& p, const Partition& part);

/// All loop-free, label-consistent quotients of `p`, root mapped along,
/// one per rooted isomorphism class, sorted by rooted canonical code.
/// Throws GuardError above spasm_vertex_limit vertices.
std::vector<RootedPattern> spasm(const RootedPattern& p);

/// Spasm member with its partition-lattice Moebius weight summed over all
/// partitions producing it: inj(p, G^v) = sum_i weight_i * hom(member_i, G^v).
struct WeightedPattern {
  RootedPattern pattern;
  Count weight;
};
std::vector<WeightedPattern> injective_expansion(const RootedPattern& p);

/// True iff some homomorphism `from` -> `to` exists (optionally pinning
/// one vertex of `from` to one of `to`). Labels must be preserved.
bool hom_exists(const Graph& from, const Graph& to, std::optional<std::pair<Vertex, Vertex>> pin = std::nullopt);

/// Smallest induced subgraph that `p` retracts onto, rooted at the image
/// of p's root; among admissible root images the one with the smallest
/// rooted canonical code is chosen.
RootedPattern core_of(const RootedPattern& p);
bool is_core(const Graph& g);

/// When deleting the root disconnects `p`, the split (root-component of the
/// smallest non-root vertex, everything else), the root kept in both.
std::optional<std::pair<RootedPattern, RootedPattern>> is_join_decomposable(const RootedPattern& p);
/// Finest join factorization: one factor per component of p minus its root.
std::vector<RootedPattern> join_factors(const RootedPattern& p);

}  // namespace lgp
