#include "lgp/io.hpp"

#include <fstream>
#include <istream>

namespace lgp {
namespace {

using nlohmann::json;

std::string label_key(const json& v) {
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_string()) return v.get<std::string>();
  throw ParseError("labels", "label must be an integer or a string");
}

json label_value(const std::string& name) {
  if (!name.empty() && name.find_first_not_of("-0123456789") == std::string::npos) {
    try {
      std::size_t used = 0;
      auto v = std::stoll(name, &used);
      if (used == name.size() && std::to_string(v) == name) return v;
    } catch (const std::exception&) {
    }
  }
  return name;
}

std::int64_t require_int(const json& record, const char* field) {
  if (!record.contains(field)) throw ParseError(field, std::string("missing field '") + field + "'");
  const auto& v = record.at(field);
  if (!v.is_number_integer()) throw ParseError(field, std::string("field '") + field + "' must be an integer");
  return v.get<std::int64_t>();
}

json parse_json(std::string_view line) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError("record", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string_view kind_name(GraphError::Kind kind) {
  switch (kind) {
    case GraphError::Kind::endpoint_out_of_range: return "endpoint_out_of_range";
    case GraphError::Kind::self_loop: return "self_loop";
    case GraphError::Kind::duplicate_edge: return "duplicate_edge";
    case GraphError::Kind::label_count: return "label_count";
    case GraphError::Kind::root_out_of_range: return "root_out_of_range";
    case GraphError::Kind::disconnected: return "disconnected";
    case GraphError::Kind::label_mismatch: return "label_mismatch";
  }
  return "malformed";
}

Graph graph_from_json(const json& record, LabelAlphabet& alphabet) {
  if (!record.is_object()) throw ParseError("record", "graph record must be a JSON object");
  std::string id;
  if (record.contains("id")) {
    if (!record["id"].is_string()) throw ParseError("id", "field 'id' must be a string");
    id = record["id"].get<std::string>();
  }
  std::int64_t n = require_int(record, "n");
  if (n < 0 || n > std::int64_t{1} << 31) throw ParseError("n", "field 'n' out of range");

  std::vector<LabelId> labels;
  if (record.contains("labels")) {
    const auto& ls = record["labels"];
    if (!ls.is_array()) throw ParseError("labels", "field 'labels' must be an array");
    if (static_cast<std::int64_t>(ls.size()) != n)
      throw ParseError("labels", "expected " + std::to_string(n) + " labels, got " + std::to_string(ls.size()));
    labels.reserve(ls.size());
    for (const auto& l : ls) labels.push_back(alphabet.intern(label_key(l)));
  }

  if (!record.contains("edges")) throw ParseError("edges", "missing field 'edges'");
  const auto& es = record["edges"];
  if (!es.is_array()) throw ParseError("edges", "field 'edges' must be an array");
  std::vector<Edge> edges;
  edges.reserve(es.size());
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edges", "each edge must be a pair of integers");
    auto u = e[0].get<std::int64_t>();
    auto v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edges",
                       "edge [" + std::to_string(u) + "," + std::to_string(v) + "] has an endpoint outside [0," +
                           std::to_string(n) + ")",
                       "endpoint_out_of_range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return {std::move(id), static_cast<std::size_t>(n), std::move(labels), std::move(edges)};
  } catch (const GraphError& e) {
    throw ParseError(e.field(), e.what(), std::string(kind_name(e.kind())));
  }
}

RootedPattern pattern_from_json(const json& record, LabelAlphabet& alphabet) {
  Graph g = graph_from_json(record, alphabet);
  if (!record.contains("root")) throw ParseError("root", "missing field 'root'", "missing_root");
  std::int64_t root = require_int(record, "root");
  if (root < 0 || root >= static_cast<std::int64_t>(g.n()))
    throw ParseError("root", "root " + std::to_string(root) + " outside [0," + std::to_string(g.n()) + ")",
                     "root_out_of_range");
  try {
    return {std::move(g), static_cast<Vertex>(root)};
  } catch (const GraphError& e) {
    throw ParseError(e.field(), e.what(), std::string(kind_name(e.kind())));
  }
}

Graph parse_graph(std::string_view line, LabelAlphabet& alphabet) {
  return graph_from_json(parse_json(line), alphabet);
}

GraphRecord parse_graph_record(std::string_view line, LabelAlphabet& alphabet) {
  json record = parse_json(line);
  GraphRecord out{graph_from_json(record, alphabet)};
  if (record.contains("meta")) out.meta = record["meta"];
  return out;
}

RootedPattern parse_pattern(std::string_view line, LabelAlphabet& alphabet) {
  return pattern_from_json(parse_json(line), alphabet);
}

json graph_to_json(const Graph& g, const LabelAlphabet& alphabet) {
  json labels = json::array();
  for (LabelId l : g.labels()) labels.push_back(label_value(alphabet.name(l)));
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json out;
  out["id"] = g.id();
  out["n"] = g.n();
  out["labels"] = std::move(labels);
  out["edges"] = std::move(edges);
  return out;
}

json pattern_to_json(const RootedPattern& p, const LabelAlphabet& alphabet) {
  json out = graph_to_json(p.graph(), alphabet);
  out["root"] = p.root();
  return out;
}

std::string serialize_graph(const Graph& g, const LabelAlphabet& alphabet, const json& meta) {
  json out = graph_to_json(g, alphabet);
  if (!meta.empty()) out["meta"] = meta;
  return out.dump();
}

std::string serialize_pattern(const RootedPattern& p, const LabelAlphabet& alphabet) {
  return pattern_to_json(p, alphabet).dump();
}

std::vector<GraphRecord> read_graph_records(std::istream& in, LabelAlphabet& alphabet) {
  std::vector<GraphRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_graph_record(line, alphabet));
    } catch (const ParseError& e) {
      throw e.at_line(lineno);
    }
  }
  return out;
}

std::vector<Graph> read_graphs(std::istream& in, LabelAlphabet& alphabet) {
  std::vector<Graph> out;
  for (auto& r : read_graph_records(in, alphabet)) out.push_back(std::move(r.graph));
  return out;
}

std::vector<GraphRecord> read_graph_file(const std::string& path, LabelAlphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw ParseError("path", "cannot open '" + path + "'", "io");
  return read_graph_records(in, alphabet);
}

std::vector<RootedPattern> read_pattern_set(std::istream& in, LabelAlphabet& alphabet) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("record", std::string("malformed JSON: ") + e.what());
  }
  std::vector<RootedPattern> out;
  if (doc.is_object()) {
    out.push_back(pattern_from_json(doc, alphabet));
    return out;
  }
  if (!doc.is_array()) throw ParseError("record", "pattern set must be a JSON array");
  for (std::size_t i = 0; i < doc.size(); ++i) {
    try {
      out.push_back(pattern_from_json(doc[i], alphabet));
    } catch (const ParseError& e) {
      throw ParseError(e.field(), "pattern #" + std::to_string(i) + ": " + e.what(), e.kind());
    }
  }
  return out;
}

std::vector<RootedPattern> read_pattern_file(const std::string& path, LabelAlphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw ParseError("path", "cannot open '" + path + "'", "io");
  return read_pattern_set(in, alphabet);
}

}  // namespace lgp
