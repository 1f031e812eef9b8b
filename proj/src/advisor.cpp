#include "lgp/advisor.hpp"

#include <algorithm>

#include "lgp/isomorphism.hpp"
#include "lgp/pattern_algebra.hpp"
#include "lgp/treewidth.hpp"

namespace lgp {

AdvisorReport advise(const std::vector<RootedPattern>& f, const std::vector<RootedPattern>& candidates) {
  AdvisorReport rep;
  std::vector<int> tw_f;
  for (const auto& p : f) {
    tw_f.push_back(treewidth(p.graph()).width);
    rep.bound_f = std::max(rep.bound_f, tw_f.back());
  }
  rep.bound_final = rep.bound_f;
  for (const auto& q : candidates) {
    CandidateAdvice adv;
    adv.candidate_id = q.id();
    auto core = core_of(q);
    adv.core_size = core.n();
    adv.core_treewidth = treewidth(core.graph()).width;
    for (std::size_t i = 0; i < f.size(); ++i)
      adv.evidence.push_back({f[i].id(), tw_f[i], hom_exists(f[i].graph(), q.graph())});
    std::sort(adv.evidence.begin(), adv.evidence.end(),
              [](const PatternEvidence& a, const PatternEvidence& b) { return a.pattern_id < b.pattern_id; });

    auto factors = join_factors(q);
    if (factors.size() >= 2) {
      std::vector<std::string> matched;
      for (const auto& fac : factors) {
        std::vector<std::string> ids;
        for (const auto& p : f)
          if (p.n() == fac.n() && is_isomorphic(fac, p)) ids.push_back(p.id());
        if (ids.empty()) {
          matched.clear();
          break;
        }
        matched.push_back(*std::min_element(ids.begin(), ids.end()));
      }
      if (!matched.empty()) {
        std::sort(matched.begin(), matched.end());
        adv.kind = AdviceKind::redundant;
        adv.rule = "join";
        adv.factors = std::move(matched);
        rep.candidates.push_back(std::move(adv));
        continue;
      }
    }

    const int k = adv.core_treewidth;
    bool all_low = true;
    bool all_ok = k >= 2;
    for (const auto& e : adv.evidence) {
      if (e.treewidth >= k) all_low = false;
      if (e.treewidth >= k && e.maps_to_candidate) all_ok = false;
    }
    if (all_ok) {
      adv.kind = AdviceKind::guaranteed_gain;
      adv.rule = all_low ? "treewidth" : "no-hom";
      rep.bound_final = std::max(rep.bound_final, treewidth(q.graph()).width);
    }
    rep.candidates.push_back(std::move(adv));
  }
  return rep;
}

std::string_view advice_name(AdviceKind k) {
  switch (k) {
    case AdviceKind::redundant:
      return "REDUNDANT";
    case AdviceKind::guaranteed_gain:
      return "GUARANTEED_GAIN";
    case AdviceKind::unknown:
      break;
  }
  return "UNKNOWN";
}

nlohmann::json advisor_json(const AdvisorReport& r) {
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : r.candidates) {
    nlohmann::json ev = nlohmann::json::array();
    for (const auto& e : c.evidence)
      ev.push_back({{"pattern", e.pattern_id}, {"treewidth", e.treewidth}, {"hom_to_candidate", e.maps_to_candidate}});
    nlohmann::json j{{"candidate", c.candidate_id},
                     {"verdict", advice_name(c.kind)},
                     {"core_treewidth", c.core_treewidth},
                     {"core_size", c.core_size},
                     {"evidence", ev}};
    j["rule"] = c.rule.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.rule);
    if (c.kind == AdviceKind::redundant) j["factors"] = c.factors;
    cands.push_back(std::move(j));
  }
  return {{"candidates", cands}, {"wl_bound", {{"f", r.bound_f}, {"with_gains", r.bound_final}}}};
}

}  // namespace lgp
