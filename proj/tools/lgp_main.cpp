// lgp: homomorphism-count features, WL experiments and pattern advice.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lgp/advisor.hpp"
#include "lgp/errors.hpp"
#include "lgp/features.hpp"
#include "lgp/generators.hpp"
#include "lgp/hom.hpp"
#include "lgp/io.hpp"
#include "lgp/pattern_tree.hpp"
#include "lgp/wl.hpp"

namespace {

using namespace lgp;
using json = nlohmann::json;

enum Exit { ok = 0, verified_failure = 1, usage = 2, guard = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::string output = "-";
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot write '" + path + "'");
    }
    out_ = path == "-" ? &std::cout : &file_;
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

json count_json(Count c) {
  if (c.raw() <= INT64_MAX && c.raw() >= INT64_MIN) return static_cast<std::int64_t>(c.raw());
  return c.str();
}

std::vector<RootedPattern> load_patterns(const std::string& path, LabelAlphabet& alphabet) {
  if (path.empty()) return {};
  return read_pattern_file(path, alphabet);
}

// One graph per path; a single path holding two graphs yields both.
std::pair<GraphRecord, GraphRecord> load_pair(const std::vector<std::string>& paths, LabelAlphabet& alphabet) {
  if (paths.size() == 1) {
    auto recs = read_graph_file(paths[0], alphabet);
    if (recs.size() < 2) throw UsageError("'" + paths[0] + "' must hold two graphs when given alone");
    return {recs[0], recs[1]};
  }
  if (paths.size() != 2) throw UsageError("expected two graph files");
  auto a = read_graph_file(paths[0], alphabet);
  auto b = read_graph_file(paths[1], alphabet);
  if (a.empty() || b.empty()) throw UsageError("graph file is empty");
  return {a[0], b[0]};
}

int run_features(const Globals& gl, const std::string& dataset, const std::string& patterns_path,
                 const std::string& mode_s, const std::string& normalize_s, const std::string& format_s,
                 const std::string& stats_from) {
  LabelAlphabet alphabet;
  auto patterns = load_patterns(patterns_path, alphabet);
  auto records = read_graph_file(dataset, alphabet);
  std::vector<Graph> graphs;
  for (auto& r : records) graphs.push_back(std::move(r.graph));
  CountMode mode = mode_s == "sub" ? CountMode::sub : CountMode::hom;
  auto fm = compute_features(graphs, patterns, mode, gl.threads);
  for (const auto& g : fm.graphs)
    for (std::size_t c = 0; c < fm.pattern_ids.size(); ++c)
      if (g.overflow[c])
        std::cerr << json{{"warning", "overflow"}, {"graph", g.graph_id}, {"pattern", fm.pattern_ids[c]}}.dump()
                  << '\n';
  WriteOptions opt;
  opt.format = format_s == "jsonl" ? OutputFormat::jsonl : OutputFormat::csv;
  opt.normalize = normalize_s == "log-z" ? Normalize::log_z : Normalize::none;
  if (opt.normalize == Normalize::log_z) {
    if (stats_from.empty()) {
      opt.stats = log_z_stats(fm);
    } else {
      auto ref = read_graph_file(stats_from, alphabet);
      std::vector<Graph> ref_graphs;
      for (auto& r : ref) ref_graphs.push_back(std::move(r.graph));
      opt.stats = log_z_stats(compute_features(ref_graphs, patterns, mode, gl.threads));
    }
  }
  Output out(gl.output);
  write_features(*out, fm, alphabet, opt);
  return ok;
}

int run_advise(const Globals& gl, const std::string& f_path, const std::string& cand_path) {
  LabelAlphabet alphabet;
  auto f = load_patterns(f_path, alphabet);
  auto cands = load_patterns(cand_path, alphabet);
  Output out(gl.output);
  *out << advisor_json(advise(f, cands)).dump(2) << '\n';
  return ok;
}

int run_wl(const Globals& gl, const std::vector<std::string>& paths, const std::string& variant,
           const std::string& patterns_path, unsigned k, std::optional<std::size_t> rounds) {
  LabelAlphabet alphabet;
  auto patterns = load_patterns(patterns_path, alphabet);
  auto [a, b] = load_pair(paths, alphabet);
  Verdict v;
  if (variant == "wl1") {
    v = wl_refine(a.graph, b.graph, rounds).verdict;
  } else if (variant == "fwl") {
    v = f_wl(a.graph, b.graph, patterns, rounds).verdict;
  } else {
    v = k_wl(a.graph, b.graph, k, rounds);
  }
  Output out(gl.output);
  *out << verdict_json(v, a.graph.id(), b.graph.id()).dump() << '\n';
  return ok;
}

int run_gen(const Globals& gl, const std::string& family, std::optional<std::size_t> m, std::optional<std::size_t> k,
            const std::string& pattern_path, std::optional<Vertex> v1) {
  LabelAlphabet alphabet;
  std::vector<MarkedGraph> graphs;
  auto need = [&](const std::optional<std::size_t>& x, const char* flag) {
    if (!x) throw UsageError(std::string("family '") + family + "' needs " + flag);
    return *x;
  };
  if (family == "fig1" || family == "fig2") {
    auto [g, h] = family == "fig1" ? fig1_pair() : fig2_pair();
    graphs = {g, h};
  } else if (family == "cycle-union") {
    auto [g, h] = cycle_union_pair(need(m, "--m"));
    graphs = {g, h};
  } else if (family == "cycle-hierarchy") {
    auto [g, h] = cycle_hierarchy_pair(need(k, "--k"));
    graphs = {g, h};
  } else {
    if (pattern_path.empty()) throw UsageError("family 'cfi' needs --pattern");
    auto ps = read_pattern_file(pattern_path, alphabet);
    if (ps.empty()) throw UsageError("pattern file is empty");
    auto c = cfi_pair(ps[0], v1);
    graphs = {c.twisted, c.untwisted};
  }
  Output out(gl.output);
  for (const auto& g : graphs) *out << serialize_graph(g.graph, alphabet, g.meta) << '\n';
  return ok;
}

std::optional<Vertex> marked(const GraphRecord& r) {
  if (r.meta.is_object() && r.meta.contains("marked") && r.meta["marked"].is_number_unsigned())
    return r.meta["marked"].get<Vertex>();
  return std::nullopt;
}

int run_witness(const Globals& gl, const std::vector<std::string>& paths, const std::string& patterns_path,
                std::size_t depth, const EnumerationBudget& budget, const std::vector<Vertex>& anchors,
                bool graph_level) {
  LabelAlphabet alphabet;
  auto patterns = load_patterns(patterns_path, alphabet);
  auto [a, b] = load_pair(paths, alphabet);
  std::optional<std::pair<Vertex, Vertex>> at;
  if (!anchors.empty()) {
    if (anchors.size() != 2) throw UsageError("--anchors takes two vertices");
    at = std::pair{anchors[0], anchors[1]};
  } else if (!graph_level && marked(a) && marked(b)) {
    at = std::pair{*marked(a), *marked(b)};
  }
  if (at && (at->first >= a.graph.n() || at->second >= b.graph.n())) throw UsageError("anchor out of range");
  auto rep = theorem1_check(a.graph, b.graph, patterns, depth, budget, at);
  json j = report_json(rep, patterns);
  j["pair"] = {a.graph.id(), b.graph.id()};
  j["anchors"] = at ? json{at->first, at->second} : json(nullptr);
  if (rep.witness) j["counts"] = {count_json(rep.witness_g), count_json(rep.witness_h)};
  Output out(gl.output);
  *out << j.dump() << '\n';
  return rep.forward_violations == 0 ? ok : verified_failure;
}

int run_count(const Globals& gl, const std::string& graph_path, const std::string& pattern_path,
              const std::string& mode_s, std::optional<Vertex> anchor, bool unrooted) {
  LabelAlphabet alphabet;
  auto ps = read_pattern_file(pattern_path, alphabet);
  if (ps.empty()) throw UsageError("pattern file is empty");
  const auto& p = ps[0];
  auto recs = read_graph_file(graph_path, alphabet);
  CountMode mode = mode_s == "sub" ? CountMode::sub : CountMode::hom;
  if (unrooted && mode == CountMode::sub) throw UsageError("--unrooted supports hom mode only");
  PatternCounter counter(p, mode);
  std::optional<HomPlan> plan;
  if (unrooted) plan.emplace(p.graph());
  Output out(gl.output);
  for (const auto& r : recs) {
    json j{{"graph", r.graph.id()}, {"pattern", p.id()}, {"mode", mode_name(mode)}};
    if (unrooted) {
      j["count"] = count_json(plan->count(r.graph));
    } else {
      auto counts = counter.counts(r.graph);
      if (anchor) {
        if (*anchor >= r.graph.n()) throw UsageError("anchor out of range for '" + r.graph.id() + "'");
        j["anchor"] = *anchor;
        j["count"] = count_json(counts[*anchor]);
      } else {
        json cs = json::array();
        for (auto c : counts) cs.push_back(count_json(c));
        j["counts"] = cs;
      }
    }
    *out << j.dump() << '\n';
  }
  return ok;
}

int fail(int code, const std::string& kind, const std::string& message, const json& extra = json::object()) {
  json j{{"error", kind}, {"message", message}};
  j.update(extra);
  std::cerr << j.dump() << std::endl;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homomorphism-count features, WL experiments and pattern advice", "lgp"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--threads", gl.threads, "Worker threads (0 = all cores)");
  app.add_option("--seed", gl.seed, "Accepted for compatibility; every algorithm is deterministic");
  app.add_option("--output", gl.output, "Output path, - for stdout");

  auto* feat = app.add_subcommand("features", "Per-vertex pattern counts for a dataset");
  std::string dataset, f_patterns, mode = "hom", normalize = "none", format = "csv", stats_from;
  feat->add_option("dataset", dataset, "Graphs, one JSON record per line")->required();
  feat->add_option("--patterns", f_patterns, "Pattern set (JSON array); omitted means no patterns");
  feat->add_option("--mode", mode)->check(CLI::IsMember({"hom", "sub"}));
  feat->add_option("--normalize", normalize)->check(CLI::IsMember({"none", "log-z"}));
  feat->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));
  feat->add_option("--stats-from", stats_from, "Dataset whose columns define the log-z statistics");

  auto* adv = app.add_subcommand("advise", "Classify candidate patterns against a pattern set");
  std::string a_f, a_cands;
  adv->add_option("--patterns", a_f, "Current pattern set F")->required();
  adv->add_option("--candidates", a_cands, "Candidate patterns")->required();

  auto* wl = app.add_subcommand("wl", "Compare two graphs with a refinement test");
  std::vector<std::string> wl_paths;
  std::string variant = "wl1", wl_patterns;
  unsigned wl_k = 2;
  std::optional<std::size_t> wl_rounds;
  wl->add_option("graphs", wl_paths, "Two graph files, or one file with two graphs")->required()->expected(1, 2);
  wl->add_option("--variant", variant)->check(CLI::IsMember({"wl1", "fwl", "kwl"}));
  wl->add_option("--patterns", wl_patterns);
  wl->add_option("--k", wl_k)->check(CLI::Range(1, 3));
  wl->add_option("--rounds", wl_rounds);

  auto* gen = app.add_subcommand("gen", "Generate a separating graph pair");
  std::string family, gen_pattern;
  std::optional<std::size_t> gen_m, gen_k;
  std::optional<Vertex> gen_v1;
  gen->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "cycle-union", "cycle-hierarchy", "cfi"}));
  gen->add_option("--m", gen_m);
  gen->add_option("--k", gen_k);
  gen->add_option("--pattern", gen_pattern);
  gen->add_option("--v1", gen_v1);

  auto* wit = app.add_subcommand("witness", "Search for a pattern tree separating two graphs");
  std::vector<std::string> wit_paths;
  std::string wit_patterns;
  std::size_t wit_depth = 2;
  EnumerationBudget budget;
  std::vector<Vertex> anchors;
  bool graph_level = false;
  wit->add_option("graphs", wit_paths)->required()->expected(1, 2);
  wit->add_option("--patterns", wit_patterns);
  wit->add_option("--depth", wit_depth, "Refinement rounds d");
  wit->add_option("--backbone", budget.backbone, "Maximum backbone vertices");
  wit->add_option("--multiplicity", budget.multiplicity, "Maximum attachments per backbone vertex");
  wit->add_option("--max-trees", budget.max_trees, "Hard cap on enumerated trees");
  wit->add_option("--anchors", anchors, "Vertex in the first graph and in the second")->delimiter(',');
  wit->add_flag("--graph-level", graph_level, "Ignore marked vertices");

  auto* cnt = app.add_subcommand("count", "Count one pattern in every graph of a file");
  std::string c_graphs, c_pattern, c_mode = "hom";
  std::optional<Vertex> c_anchor;
  bool c_unrooted = false;
  cnt->add_option("graphs", c_graphs)->required();
  cnt->add_option("--pattern", c_pattern)->required();
  cnt->add_option("--mode", c_mode)->check(CLI::IsMember({"hom", "sub"}));
  cnt->add_option("--anchor", c_anchor);
  cnt->add_flag("--unrooted", c_unrooted);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    return fail(usage, "usage", e.what());
  }

  try {
    if (*feat) return run_features(gl, dataset, f_patterns, mode, normalize, format, stats_from);
    if (*adv) return run_advise(gl, a_f, a_cands);
    if (*wl) return run_wl(gl, wl_paths, variant, wl_patterns, wl_k, wl_rounds);
    if (*gen) return run_gen(gl, family, gen_m, gen_k, gen_pattern, gen_v1);
    if (*wit) return run_witness(gl, wit_paths, wit_patterns, wit_depth, budget, anchors, graph_level);
    if (*cnt) return run_count(gl, c_graphs, c_pattern, c_mode, c_anchor, c_unrooted);
  } catch (const ParseError& e) {
    json extra{{"kind", e.kind()}, {"field", e.field()}};
    if (e.line() > 0) extra["line"] = e.line();
    return fail(usage, "parse", e.what(), extra);
  } catch (const GraphError& e) {
    return fail(usage, "graph", e.what(), {{"field", e.field()}});
  } catch (const UsageError& e) {
    return fail(usage, "usage", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(usage, "usage", e.what());
  } catch (const GuardError& e) {
    return fail(guard, "guard", e.what());
  } catch (const OverflowError& e) {
    return fail(guard, "overflow", e.what());
  } catch (const std::exception& e) {
    return fail(verified_failure, "internal", e.what());
  }
  return usage;
}
