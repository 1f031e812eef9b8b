#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgp/graph.hpp"

namespace lgp {

using Color = std::uint32_t;

/// Colors of one graph for every round of a joint refinement. Ids are
/// shared with the other graph of the run.
struct Coloring {
  std::vector<std::vector<Color>> history;  // history[d][v]

  [[nodiscard]] std::size_t rounds() const { return history.size(); }
  /// Colors at round d; rounds past stabilization repeat the last one.
  [[nodiscard]] const std::vector<Color>& at(std::size_t d) const {
    return history[std::min(d, history.size() - 1)];
  }
  [[nodiscard]] const std::vector<Color>& final() const { return history.back(); }
  /// Vertex classes at round d, each sorted, ordered by smallest member.
  [[nodiscard]] std::vector<std::vector<Vertex>> classes(std::size_t d) const;
};

struct Verdict {
  bool distinguished = false;
  std::optional<std::size_t> round;
  std::string witness;  // first color whose multiplicity differs
};

struct Refinement {
  Coloring g;
  Coloring h;
  Verdict verdict;
  std::size_t stable_round = 0;  // last round that split a class
};

/// Joint color refinement of two graphs from the given initial keys with a
/// shared injective dictionary. Stops once a round adds no class or after
/// max_rounds (default n_G + n_H).
Refinement wl_refine(const Graph& g, const Graph& h, const std::vector<std::string>& init_g,
                     const std::vector<std::string>& init_h, std::optional<std::size_t> max_rounds = std::nullopt);
/// Initial keys are the vertex labels.
Refinement wl_refine(const Graph& g, const Graph& h, std::optional<std::size_t> max_rounds = std::nullopt);

/// Initial key of every vertex: label followed by hom(P^r, G^v) for P in F.
std::vector<std::string> hom_keys(const Graph& g, const std::vector<RootedPattern>& patterns);

Refinement f_wl(const Graph& g, const Graph& h, const std::vector<RootedPattern>& patterns,
                std::optional<std::size_t> max_rounds = std::nullopt);

/// First round at which v (in g) and w (in h) got different colors.
Verdict vertex_verdict(const Refinement& r, Vertex v, Vertex w);

inline constexpr std::uint64_t k_wl_tuple_limit = 10'000'000;

/// Folklore k-WL, k in {1,2,3}. Throws GuardError when n_G^k + n_H^k
/// exceeds k_wl_tuple_limit, std::invalid_argument for other k.
Verdict k_wl(const Graph& g, const Graph& h, unsigned k, std::optional<std::size_t> max_rounds = std::nullopt);

/// Pairwise F-WL verdicts; entry [i][j] compares graphs[i] with graphs[j].
std::vector<std::vector<Verdict>> distinguishability_matrix(const std::vector<Graph>& graphs,
                                                            const std::vector<RootedPattern>& patterns);

nlohmann::json verdict_json(const Verdict& v, const std::string& a, const std::string& b);

}  // namespace lgp
