#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lgp/graph.hpp"

namespace lgp {

/// Malformed interchange record. `kind()` is a stable machine-readable tag
/// (malformed, self_loop, duplicate_edge, endpoint_out_of_range, ...),
/// `field()` the offending record field, `line()` 1-based or 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& what, std::string kind = "malformed", std::size_t line = 0)
      : std::runtime_error(what), kind_(std::move(kind)), field_(std::move(field)), line_(line) {}

  [[nodiscard]] const std::string& kind() const { return kind_; }
  [[nodiscard]] const std::string& field() const { return field_; }
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] ParseError at_line(std::size_t line) const { return {field_, what(), kind_, line}; }

 private:
  std::string kind_;
  std::string field_;
  std::size_t line_;
};

/// Stable tag for a GraphError kind, as used in ParseError::kind().
std::string_view kind_name(GraphError::Kind kind);

/// A graph plus the free-form `meta` object carried alongside it.
struct GraphRecord {
  Graph graph;
  nlohmann::json meta = nlohmann::json::object();
};

Graph parse_graph(std::string_view line, LabelAlphabet& alphabet);
GraphRecord parse_graph_record(std::string_view line, LabelAlphabet& alphabet);
RootedPattern parse_pattern(std::string_view line, LabelAlphabet& alphabet);

Graph graph_from_json(const nlohmann::json& record, LabelAlphabet& alphabet);
RootedPattern pattern_from_json(const nlohmann::json& record, LabelAlphabet& alphabet);

nlohmann::json graph_to_json(const Graph& g, const LabelAlphabet& alphabet);
nlohmann::json pattern_to_json(const RootedPattern& p, const LabelAlphabet& alphabet);
/// One-line record; `meta` is emitted only when non-empty.
std::string serialize_graph(const Graph& g, const LabelAlphabet& alphabet,
                            const nlohmann::json& meta = nlohmann::json::object());
std::string serialize_pattern(const RootedPattern& p, const LabelAlphabet& alphabet);

/// JSON Lines, one graph per non-blank line. Errors carry the line number.
std::vector<GraphRecord> read_graph_records(std::istream& in, LabelAlphabet& alphabet);
std::vector<Graph> read_graphs(std::istream& in, LabelAlphabet& alphabet);
std::vector<GraphRecord> read_graph_file(const std::string& path, LabelAlphabet& alphabet);

/// Pattern-set file: a JSON array of pattern records. A single pattern
/// object is accepted as a one-element set.
std::vector<RootedPattern> read_pattern_set(std::istream& in, LabelAlphabet& alphabet);
std::vector<RootedPattern> read_pattern_file(const std::string& path, LabelAlphabet& alphabet);

}  // namespace lgp
