#include "lgp/features.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace lgp {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

FeatureMatrix compute_features(const std::vector<Graph>& graphs, const std::vector<RootedPattern>& patterns,
                               CountMode mode, unsigned threads) {
  FeatureMatrix fm;
  fm.mode = mode;
  std::vector<PatternCounter> counters;
  for (const auto& p : patterns) {
    fm.pattern_ids.push_back(p.id());
    counters.emplace_back(p, mode);
  }
  fm.graphs.resize(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) { fm.graphs[i] = hom_vector(counters, graphs[i]); });
  return fm;
}

std::string column_name(CountMode mode, const std::string& pattern_id) {
  return std::string(mode_name(mode)) + "_" + pattern_id;
}

std::vector<ColumnStats> log_z_stats(const FeatureMatrix& fm) {
  std::vector<ColumnStats> out;
  for (std::size_t c = 0; c < fm.pattern_ids.size(); ++c) {
    ColumnStats s;
    s.name = column_name(fm.mode, fm.pattern_ids[c]);
    std::vector<double> xs;
    for (const auto& g : fm.graphs) {
      if (g.overflow[c]) continue;
      for (const auto& v : g.columns[c]) xs.push_back(std::log1p(v.to_double()));
    }
    if (xs.size() < 2) {
      s.constant = true;
      if (!xs.empty()) s.mean = xs[0];
      out.push_back(s);
      continue;
    }
    double sum = 0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    double ss = 0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    s.constant = std::all_of(xs.begin(), xs.end(), [&](double x) { return x == xs[0]; });
    out.push_back(s);
  }
  return out;
}

double log_z(Count c, const ColumnStats& s) {
  if (s.constant || s.stddev == 0) return 0;
  return (std::log1p(c.to_double()) - s.mean) / s.stddev;
}

Count inverse_log_z(double z, const ColumnStats& s) {
  double c = std::expm1(z * s.stddev + s.mean);
  return Count::from_raw(static_cast<Count::Raw>(std::llround(c)));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_features(std::ostream& out, const FeatureMatrix& fm, const LabelAlphabet& alphabet,
                    const WriteOptions& opt) {
  const bool z = opt.normalize == Normalize::log_z;
  if (z && opt.stats.size() != fm.pattern_ids.size())
    throw std::invalid_argument("statistics do not match the pattern columns");
  std::vector<std::string> names;
  for (const auto& id : fm.pattern_ids) names.push_back(column_name(fm.mode, id));
  if (opt.format == OutputFormat::csv) {
    if (z) {
      out << "# transform: z = (log(1 + count) - mean) / stddev\n";
      out << "# column,mean,stddev,constant\n";
      for (std::size_t c = 0; c < names.size(); ++c)
        out << "# " << csv_field(names[c]) << ',' << real(opt.stats[c].mean) << ',' << real(opt.stats[c].stddev)
            << ',' << (opt.stats[c].constant ? 1 : 0) << '\n';
    }
    out << "graph_id,vertex_id,label";
    for (const auto& n : names) out << ',' << csv_field(n);
    out << '\n';
    for (const auto& g : fm.graphs) {
      std::string gid = csv_field(g.graph_id);
      for (std::size_t v = 0; v < g.n; ++v) {
        out << gid << ',' << v << ',' << csv_field(alphabet.name(g.labels.at(v)));
        for (std::size_t c = 0; c < names.size(); ++c) {
          out << ',';
          if (g.overflow[c]) continue;
          out << (z ? real(log_z(g.columns[c][v], opt.stats[c])) : g.columns[c][v].str());
        }
        out << '\n';
      }
    }
    return;
  }
  if (z) {
    nlohmann::json cols = nlohmann::json::array();
    for (std::size_t c = 0; c < names.size(); ++c)
      cols.push_back({{"column", names[c]},
                      {"mean", opt.stats[c].mean},
                      {"stddev", opt.stats[c].stddev},
                      {"constant", opt.stats[c].constant}});
    out << nlohmann::json{{"transform", "z = (log(1 + count) - mean) / stddev"}, {"columns", cols}}.dump() << '\n';
  }
  for (const auto& g : fm.graphs)
    for (std::size_t v = 0; v < g.n; ++v) {
      nlohmann::ordered_json row;
      row["graph_id"] = g.graph_id;
      row["vertex_id"] = v;
      row["label"] = alphabet.name(g.labels.at(v));
      for (std::size_t c = 0; c < names.size(); ++c) {
        if (g.overflow[c]) {
          row[names[c]] = nullptr;
        } else if (z) {
          row[names[c]] = log_z(g.columns[c][v], opt.stats[c]);
        } else {
          const auto raw = g.columns[c][v].raw();
          if (raw <= INT64_MAX)
            row[names[c]] = static_cast<std::int64_t>(raw);
          else
            row[names[c]] = g.columns[c][v].str();
        }
      }
      out << row.dump() << '\n';
    }
}

std::vector<ColumnStats> read_stats_header(std::istream& in) {
  std::vector<ColumnStats> out;
  std::string line;
  while (in.peek() == '#' && std::getline(in, line)) {
    if (line.rfind("# transform", 0) == 0 || line.rfind("# column,", 0) == 0) continue;
    std::string body = line.substr(2);
    auto c3 = body.rfind(',');
    auto c2 = body.rfind(',', c3 - 1);
    auto c1 = body.rfind(',', c2 - 1);
    ColumnStats s;
    s.name = body.substr(0, c1);
    s.mean = std::stod(body.substr(c1 + 1, c2 - c1 - 1));
    s.stddev = std::stod(body.substr(c2 + 1, c3 - c2 - 1));
    s.constant = body.substr(c3 + 1) == "1";
    out.push_back(s);
  }
  return out;
}

}  // namespace lgp
