#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lgp/graph.hpp"

namespace lgp {

/// Label- and edge-preserving bijection test by backtracking with
/// label/degree pruning. Exact for any size; intended for small graphs.
bool is_isomorphic(const Graph& g, const Graph& h);
/// Rooted variant: the bijection must also send root to root.
bool is_isomorphic(const RootedPattern& p, const RootedPattern& q);

/// Number of root-preserving automorphisms of `p` (>= 1).
std::uint64_t automorphism_count(const RootedPattern& p);
/// Number of automorphisms of the unrooted graph.
std::uint64_t automorphism_count(const Graph& g);

/// Isomorphism-complete invariant: equal codes iff the graphs are
/// isomorphic. Connected pieces are encoded through their block-cut trees,
/// each block by individualization-refinement search for the minimal
/// adjacency encoding. Deterministic across runs.
std::string canonical_code(const Graph& g);
/// Rooted-isomorphism-complete invariant.
std::string canonical_code(const RootedPattern& p);
/// Rooted code of an arbitrary graph at `root` (the root's component only
/// is encoded when the graph is disconnected).
std::string rooted_code(const Graph& g, Vertex root);

}  // namespace lgp
