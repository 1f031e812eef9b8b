#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lgp/graph.hpp"

namespace lgp {

enum class AdviceKind { redundant, guaranteed_gain, unknown };

/// What was checked for one member P of F against a candidate Q.
struct PatternEvidence {
  std::string pattern_id;
  int treewidth = 0;
  bool maps_to_candidate = false;  // some hom P -> Q, roots ignored
};

struct CandidateAdvice {
  std::string candidate_id;
  AdviceKind kind = AdviceKind::unknown;
  std::string rule;                  // "join", "treewidth", "no-hom" or empty
  std::vector<std::string> factors;  // F members matching the join factors
  int core_treewidth = 0;
  std::size_t core_size = 0;
  std::vector<PatternEvidence> evidence;  // sorted by pattern id
};

struct AdvisorReport {
  std::vector<CandidateAdvice> candidates;  // input order
  int bound_f = 1;      // max treewidth over F (at least 1)
  int bound_final = 1;  // over F and every guaranteed-gain candidate
};

/// Per candidate Q:
///  REDUNDANT when Q splits at its root into two or more pieces, each
///    rooted-isomorphic to a member of F;
///  GUARANTEED_GAIN when k = tw(core(Q)) >= 2 and every P in F has
///    tw(P) < k or admits no homomorphism into Q;
///  UNKNOWN otherwise.
AdvisorReport advise(const std::vector<RootedPattern>& f, const std::vector<RootedPattern>& candidates);

std::string_view advice_name(AdviceKind k);
nlohmann::json advisor_json(const AdvisorReport& r);

}  // namespace lgp
