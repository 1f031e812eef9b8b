#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lgp/graph.hpp"
#include "lgp/hom.hpp"

namespace lgp {

/// Runs `fn(i)` for i in [0, count) on `threads` workers (0 = hardware
/// concurrency). The first exception thrown by any call is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

/// Feature rows for every graph, computed in parallel; the result does not
/// depend on the number of workers.
FeatureMatrix compute_features(const std::vector<Graph>& graphs, const std::vector<RootedPattern>& patterns,
                               CountMode mode, unsigned threads = 1);

std::string column_name(CountMode mode, const std::string& pattern_id);

/// Statistics of x = log(1 + c) over every non-overflowed cell of a column.
struct ColumnStats {
  std::string name;
  double mean = 0;
  double stddev = 0;  // sample (n - 1)
  bool constant = false;
};

std::vector<ColumnStats> log_z_stats(const FeatureMatrix& fm);
double log_z(Count c, const ColumnStats& s);
/// Nearest count whose transform is z.
Count inverse_log_z(double z, const ColumnStats& s);

enum class Normalize { none, log_z };
enum class OutputFormat { csv, jsonl };

struct WriteOptions {
  OutputFormat format = OutputFormat::csv;
  Normalize normalize = Normalize::none;
  std::vector<ColumnStats> stats;  // required for log_z
};

/// CSV: `# ` lines carrying the transform and column statistics when
/// normalized, then the header row `graph_id,vertex_id,label,<columns>`.
/// JSONL: a leading statistics object when normalized, then one object per
/// vertex. Overflowed cells are empty (CSV) or null (JSONL).
void write_features(std::ostream& out, const FeatureMatrix& fm, const LabelAlphabet& alphabet,
                    const WriteOptions& opt);

/// Reads the statistics block written ahead of a normalized CSV.
std::vector<ColumnStats> read_stats_header(std::istream& in);

}  // namespace lgp
