#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "laman/codecs.hpp"
#include "laman/constructions.hpp"
#include "laman/engine.hpp"
#include "laman/errors.hpp"
#include "laman/geometry.hpp"
#include "laman/graph.hpp"
#include "laman/sparsity.hpp"

namespace laman {

enum class OutputFormat { text, json, csv };

struct JobConfig {
  std::string input_path = "-";
  InputFormat in_format = InputFormat::auto_detect;
  OutputFormat out_format = OutputFormat::text;
  std::string output_path;
  int jobs = 1;
  std::string cache_path;
  double timeout_seconds = 0;
  bool stats = false;
  bool sorted = false;
  BiedgeStrategy strategy = BiedgeStrategy::auto_estimate;
  bool big = false;
  int tree_jobs = 1;
};

namespace detail {

// Exit severities: 0 success, 1 invalid input, 2 computation error. The
// process exit code is the worst severity seen.
struct StreamResult {
  std::optional<std::string> text;
  int severity = 0;
};

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  return quoted + "\"";
}

inline EngineOptions engine_options(const JobConfig& cfg) {
  EngineOptions eo;
  eo.strategy = cfg.strategy;
  eo.timeout_seconds = cfg.timeout_seconds;
  eo.tree_jobs = cfg.tree_jobs;
  return eo;
}

/// Resolves configured file paths against the caller's fallback streams and
/// invokes `body(in, out)`. "-" and "" mean the fallback.
template <class Body>
int with_io(const JobConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err,
            Body body) {
  std::ifstream fin;
  std::istream* pin = &in;
  if (!cfg.input_path.empty() && cfg.input_path != "-") {
    fin.open(cfg.input_path);
    if (!fin) {
      err << "cannot open input file: " << cfg.input_path << "\n";
      return 1;
    }
    pin = &fin;
  }
  std::ofstream fout;
  std::ostream* pout = &out;
  if (!cfg.output_path.empty() && cfg.output_path != "-") {
    fout.open(cfg.output_path);
    if (!fout) {
      err << "cannot open output file: " << cfg.output_path << "\n";
      return 1;
    }
    pout = &fout;
  }
  return body(*pin, *pout);
}

/// Batch driver: streams graphs from `in` to a worker pool, serializes
/// rendered records through a single output lock (in input order when
/// `sorted`), and returns the worst severity.
template <class PerGraph>
int run_stream(const JobConfig& cfg, std::istream& in, std::ostream& out,
               const std::string& csv_header, PerGraph per_graph) {
  if (cfg.out_format == OutputFormat::csv && !csv_header.empty()) out << csv_header << "\n";

  // Work items: (1-based index, payload, format). Edge-list input is a
  // single item holding the whole text.
  std::deque<std::tuple<std::size_t, std::string, InputFormat>> queue;
  std::mutex queue_mutex;
  std::condition_variable queue_pop, queue_push;
  bool producer_done = false;

  std::mutex out_mutex;
  std::map<std::size_t, std::string> pending;
  std::size_t next_out = 1;
  auto emit = [&](std::size_t idx, const std::optional<std::string>& text) {
    std::lock_guard<std::mutex> lock(out_mutex);
    if (!cfg.sorted) {
      if (text) out << *text << "\n";
      return;
    }
    pending[idx] = text.value_or(std::string());
    for (auto it = pending.find(next_out); it != pending.end(); it = pending.find(next_out)) {
      if (!it->second.empty()) out << it->second << "\n";
      pending.erase(it);
      ++next_out;
    }
  };

  std::atomic<int> worst{0};
  auto note = [&](int severity) {
    int cur = worst.load(std::memory_order_relaxed);
    while (severity > cur &&
           !worst.compare_exchange_weak(cur, severity, std::memory_order_relaxed)) {
    }
  };

  auto worker = [&] {
    for (;;) {
      std::tuple<std::size_t, std::string, InputFormat> item;
      {
        std::unique_lock<std::mutex> lock(queue_mutex);
        queue_pop.wait(lock, [&] { return !queue.empty() || producer_done; });
        if (queue.empty()) return;
        item = std::move(queue.front());
        queue.pop_front();
        queue_push.notify_one();
      }
      StreamResult r = per_graph(std::get<1>(item), std::get<2>(item));
      note(r.severity);
      emit(std::get<0>(item), r.text);
    }
  };

  const int jobs = std::max(1, cfg.jobs);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);

  const std::size_t cap = static_cast<std::size_t>(jobs) * 4;
  auto push = [&](std::size_t idx, std::string payload, InputFormat fmt) {
    std::unique_lock<std::mutex> lock(queue_mutex);
    queue_push.wait(lock, [&] { return queue.size() < cap; });
    queue.emplace_back(idx, std::move(payload), fmt);
    queue_pop.notify_one();
  };

  InputFormat fmt = cfg.in_format;
  GraphStream lines(in, InputFormat::graph6);
  std::size_t count = 0;
  while (auto item = lines.next_line()) {
    if (fmt == InputFormat::auto_detect) fmt = sniff_format(item->second);
    if (fmt == InputFormat::edge_list) {
      std::ostringstream rest;
      rest << item->second << '\n' << in.rdbuf();
      push(1, rest.str(), InputFormat::edge_list);
      count = 1;
      break;
    }
    push(++count, std::move(item->second), InputFormat::graph6);
  }
  {
    std::lock_guard<std::mutex> lock(queue_mutex);
    producer_done = true;
  }
  queue_pop.notify_all();
  for (auto& t : pool) t.join();
  return worst.load();
}

/// Parses one work item; graph6 payloads echo back verbatim as the record's
/// graph column, edge lists are re-encoded densely.
inline std::pair<SimpleGraph, std::string> parse_item(const std::string& payload,
                                                      InputFormat fmt) {
  if (fmt == InputFormat::graph6) return {parse_graph6(payload), payload};
  SimpleGraph g = parse_edge_list(payload);
  return {g, write_graph6(g.densified())};
}

inline std::string format_error_record(const JobConfig& cfg, const std::string& graph_col,
                                       const std::string& message, bool with_stats_columns) {
  switch (cfg.out_format) {
    case OutputFormat::json: {
      nlohmann::json j{{"graph", graph_col}, {"error", message}};
      return j.dump();
    }
    case OutputFormat::csv: {
      std::string row = csv_cell(graph_col) + ",,,,";
      if (with_stats_columns && cfg.stats) row += ",,,";
      return row + csv_cell(message);
    }
    case OutputFormat::text:
      return (graph_col.empty() ? std::string("<input>") : graph_col) + " error: " + message;
  }
  return message;
}

// parse_error::what() already carries the offset; edge-list offsets are
// 1-based line numbers, graph6 offsets are byte positions.
inline std::string describe_parse_error(const parse_error& e, InputFormat) { return e.what(); }

template <class Count>
std::string count_decimal(const SimpleGraph& g, MemoTable<Count>& memo, ComputationStats& st,
                          const EngineOptions& eo) {
  return lam_bigraph(bigraph_of(g.densified()), memo, st, eo).to_string();
}

inline std::string count_decimal(const SimpleGraph& g, MemoTable<BigUint>& memo,
                                 ComputationStats& st, const EngineOptions& eo) {
  return lam_bigraph_big(bigraph_of(g.densified()), memo, st, eo).to_string();
}

template <class Count>
int run_count_impl(const JobConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  MemoTable<Count> memo;
  if (!cfg.cache_path.empty()) {
    auto report = memo.load_file(cfg.cache_path);
    if (report.file_found && report.skipped > 0) {
      err << "cache: skipped " << report.skipped << " unusable entries in " << cfg.cache_path
          << "\n";
    }
  }
  const EngineOptions eo = engine_options(cfg);

  std::string header = "graph,n,m,laman_number";
  if (cfg.stats) header += ",nodes_visited,memo_hits,seconds";
  header += ",error";

  int rc = run_stream(cfg, in, out, header, [&](const std::string& payload, InputFormat fmt) {
    StreamResult r;
    SimpleGraph g;
    std::string graph_col;
    std::string error;
    int severity = 0;
    std::string value;
    ComputationStats st;
    try {
      std::tie(g, graph_col) = parse_item(payload, fmt);
      if (!is_laman(g)) {
        error = "not a Laman graph (" + to_string(laman_defect(g)) + ")";
        severity = 1;
      } else {
        value = count_decimal(g, memo, st, eo);
      }
    } catch (const parse_error& e) {
      error = describe_parse_error(e, fmt);
      severity = 1;
    } catch (const timeout_error&) {
      error = "timeout";
      severity = 2;
    } catch (const computation_error& e) {
      error = e.what();
      severity = 2;
    } catch (const invalid_input_error& e) {
      error = e.what();
      severity = 1;
    }

    r.severity = severity;
    if (!error.empty()) {
      r.text = format_error_record(cfg, graph_col.empty() ? payload.substr(0, 40) : graph_col,
                                   error, true);
      return r;
    }

    switch (cfg.out_format) {
      case OutputFormat::json: {
        nlohmann::json j{{"graph", graph_col},
                         {"n", g.vertex_count()},
                         {"m", g.edge_count()},
                         {"laman_number", value}};
        if (cfg.stats) {
          j["nodes_visited"] = st.nodes_visited.load();
          j["memo_hits"] = st.memo_hits.load();
          j["seconds"] = st.seconds;
        }
        r.text = j.dump();
        break;
      }
      case OutputFormat::csv: {
        std::ostringstream row;
        row << csv_cell(graph_col) << ',' << g.vertex_count() << ',' << g.edge_count() << ','
            << value;
        if (cfg.stats) {
          row << ',' << st.nodes_visited.load() << ',' << st.memo_hits.load() << ',' << st.seconds;
        }
        row << ',';
        r.text = row.str();
        break;
      }
      case OutputFormat::text: {
        std::ostringstream line;
        line << graph_col << " n=" << g.vertex_count() << " m=" << g.edge_count()
             << " laman_number=" << value;
        if (cfg.stats) {
          line << " nodes=" << st.nodes_visited.load() << " memo_hits=" << st.memo_hits.load()
               << " seconds=" << st.seconds;
        }
        r.text = line.str();
        break;
      }
    }
    return r;
  });

  if (!cfg.cache_path.empty()) {
    if (!memo.save_file(cfg.cache_path)) {
      err << "cache: could not write " << cfg.cache_path << "\n";
    }
  }
  return rc;
}

template <class Count>
int run_max_impl(const JobConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  MemoTable<Count> memo;
  if (!cfg.cache_path.empty()) {
    auto report = memo.load_file(cfg.cache_path);
    if (report.file_found && report.skipped > 0) {
      err << "cache: skipped " << report.skipped << " unusable entries in " << cfg.cache_path
          << "\n";
    }
  }
  const EngineOptions eo = engine_options(cfg);

  struct Best {
    BigUint value;
    std::string graph_col;
  };
  std::map<int, Best> best_by_n;
  std::mutex best_mutex;
  std::mutex err_mutex;

  int rc = run_stream(cfg, in, out, std::string(), [&](const std::string& payload, InputFormat fmt) {
    StreamResult r;
    SimpleGraph g;
    std::string graph_col;
    std::string error;
    try {
      std::tie(g, graph_col) = parse_item(payload, fmt);
      if (!is_laman(g)) {
        error = "not a Laman graph (" + to_string(laman_defect(g)) + ")";
        r.severity = 1;
      } else {
        ComputationStats st;
        BigUint value = BigUint::from_string(count_decimal(g, memo, st, eo));
        std::lock_guard<std::mutex> lock(best_mutex);
        auto [it, inserted] = best_by_n.try_emplace(g.vertex_count(), Best{value, graph_col});
        if (!inserted && (it->second.value < value ||
                          (value == it->second.value && graph_col < it->second.graph_col))) {
          it->second = Best{value, graph_col};
        }
      }
    } catch (const parse_error& e) {
      error = describe_parse_error(e, fmt);
      r.severity = 1;
    } catch (const timeout_error&) {
      error = "timeout";
      r.severity = 2;
    } catch (const computation_error& e) {
      error = e.what();
      r.severity = 2;
    } catch (const invalid_input_error& e) {
      error = e.what();
      r.severity = 1;
    }
    if (!error.empty()) {
      std::lock_guard<std::mutex> lock(err_mutex);
      err << (graph_col.empty() ? payload.substr(0, 40) : graph_col) << ": " << error << "\n";
    }
    return r;
  });

  if (cfg.out_format == OutputFormat::csv) out << "n,laman_number,graph\n";
  for (const auto& [n, best] : best_by_n) {
    switch (cfg.out_format) {
      case OutputFormat::json: {
        nlohmann::json j{{"n", n}, {"laman_number", best.value.to_string()}, {"graph", best.graph_col}};
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::csv:
        out << n << ',' << best.value.to_string() << ',' << csv_cell(best.graph_col) << "\n";
        break;
      case OutputFormat::text:
        out << "n=" << n << " max_laman_number=" << best.value.to_string() << " graph="
            << best.graph_col << "\n";
        break;
    }
  }

  if (!cfg.cache_path.empty()) {
    if (!memo.save_file(cfg.cache_path)) {
      err << "cache: could not write " << cfg.cache_path << "\n";
    }
  }
  return rc;
}

inline SimpleGraph read_single_graph(std::istream& in, InputFormat fmt) {
  std::ostringstream all;
  all << in.rdbuf();
  std::string text = all.str();
  std::istringstream scan(text);
  std::string first;
  while (std::getline(scan, first)) {
    if (!first.empty() && first.back() == '\r') first.pop_back();
    if (!first.empty()) break;
  }
  if (fmt == InputFormat::auto_detect) fmt = sniff_format(first);
  if (fmt == InputFormat::graph6) return parse_graph6(first);
  return parse_edge_list(text);
}

inline SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw invalid_input_error("cannot open graph file: " + path);
  return read_single_graph(f, InputFormat::auto_detect);
}

}  // namespace detail

inline int run_check(const JobConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return detail::with_io(cfg, in, out, err, [&](std::istream& is, std::ostream& os) {
    return detail::run_stream(
        cfg, is, os, "graph,n,m,class,error",
        [&](const std::string& payload, InputFormat fmt) {
          detail::StreamResult r;
          SimpleGraph g;
          std::string graph_col;
          std::string error;
          LamanClass verdict{};
          try {
            std::tie(g, graph_col) = detail::parse_item(payload, fmt);
            verdict = laman_defect(g);
          } catch (const parse_error& e) {
            error = detail::describe_parse_error(e, fmt);
          } catch (const invalid_input_error& e) {
            error = e.what();
          }
          if (!error.empty()) {
            r.severity = 1;
            r.text = detail::format_error_record(cfg, graph_col.empty() ? payload.substr(0, 40) : graph_col,
                                                 error, false);
            return r;
          }
          switch (cfg.out_format) {
            case OutputFormat::json: {
              nlohmann::json j{{"graph", graph_col},
                               {"n", g.vertex_count()},
                               {"m", g.edge_count()},
                               {"class", to_string(verdict)}};
              r.text = j.dump();
              break;
            }
            case OutputFormat::csv: {
              std::ostringstream row;
              row << detail::csv_cell(graph_col) << ',' << g.vertex_count() << ','
                  << g.edge_count() << ',' << to_string(verdict) << ',';
              r.text = row.str();
              break;
            }
            case OutputFormat::text: {
              std::ostringstream line;
              line << graph_col << " n=" << g.vertex_count() << " m=" << g.edge_count() << " "
                   << to_string(verdict);
              r.text = line.str();
              break;
            }
          }
          return r;
        });
  });
}

inline int run_count(const JobConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return detail::with_io(cfg, in, out, err, [&](std::istream& is, std::ostream& os) {
    return cfg.big ? detail::run_count_impl<BigUint>(cfg, is, os, err)
                   : detail::run_count_impl<LamanCount>(cfg, is, os, err);
  });
}

inline int run_max(const JobConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return detail::with_io(cfg, in, out, err, [&](std::istream& is, std::ostream& os) {
    return cfg.big ? detail::run_max_impl<BigUint>(cfg, is, os, err)
                   : detail::run_max_impl<LamanCount>(cfg, is, os, err);
  });
}

struct ConstructArgs {
  std::string kind;  // caterpillar | fan | gfan
  int copies = 2;
  std::optional<Edge> edge;
  std::optional<std::array<Vertex, 3>> triangle;
  std::string subgraph_path;
  bool edges_output = false;  // graph6 by default
};

inline int run_construct(const JobConfig& cfg, const ConstructArgs& args, std::istream& in,
                         std::ostream& out, std::ostream& err) {
  return detail::with_io(cfg, in, out, err, [&](std::istream& is, std::ostream& os) {
    try {
      SimpleGraph g = detail::read_single_graph(is, cfg.in_format);
      SimpleGraph result;
      if (args.kind == "caterpillar") {
        Edge e = args.edge.value_or(g.edge_count() > 0 ? g.edges().front() : Edge{0, 1});
        result = caterpillar(g, args.copies, e);
      } else if (args.kind == "fan") {
        std::array<Vertex, 3> t;
        if (args.triangle) {
          t = *args.triangle;
        } else if (auto found = detail::find_triangle(g)) {
          t = *found;
        } else {
          throw invalid_input_error("base graph has no triangle");
        }
        result = fan(g, t, args.copies);
      } else if (args.kind == "gfan") {
        if (args.subgraph_path.empty()) {
          throw invalid_input_error("gfan needs --subgraph with the shared subgraph");
        }
        result = generalized_fan(g, detail::read_graph_file(args.subgraph_path), args.copies);
      } else {
        throw invalid_input_error("unknown construction kind: " + args.kind);
      }
      if (args.edges_output) {
        os << write_edge_list(result);
      } else {
        os << write_graph6(result) << "\n";
      }
      return 0;
    } catch (const parse_error& e) {
      err << "parse error: " << e.what() << "\n";
      return 1;
    } catch (const invalid_input_error& e) {
      err << e.what() << "\n";
      return 1;
    }
  });
}

inline int run_bound(const JobConfig& cfg, const std::string& kind, long n,
                     const std::string& subgraph_path, std::istream& in, std::ostream& out,
                     std::ostream& err) {
  return detail::with_io(cfg, in, out, err, [&](std::istream& is, std::ostream& os) {
    try {
      SimpleGraph g = detail::read_single_graph(is, cfg.in_format);
      BigUint value;
      if (kind == "caterpillar") {
        value = caterpillar_bound(g, n);
      } else if (kind == "fan") {
        value = fan_bound(g, n);
      } else if (kind == "gfan") {
        if (subgraph_path.empty()) throw invalid_input_error("gfan needs --subgraph");
        value = generalized_fan_bound(g, detail::read_graph_file(subgraph_path), n);
      } else {
        throw invalid_input_error("unknown bound kind: " + kind);
      }
      switch (cfg.out_format) {
        case OutputFormat::json:
          os << nlohmann::json{{"kind", kind}, {"n", n}, {"bound", value.to_string()}}.dump()
             << "\n";
          break;
        case OutputFormat::csv:
          os << "kind,n,bound\n" << kind << ',' << n << ',' << value.to_string() << "\n";
          break;
        case OutputFormat::text:
          os << value.to_string() << "\n";
          break;
      }
      return 0;
    } catch (const parse_error& e) {
      err << "parse error: " << e.what() << "\n";
      return 1;
    } catch (const invalid_input_error& e) {
      err << e.what() << "\n";
      return 1;
    } catch (const computation_error& e) {
      err << e.what() << "\n";
      return 2;
    }
  });
}

inline int run_rate(const JobConfig& cfg, const std::string& kind, const std::string& subgraph_path,
                    std::istream& in, std::ostream& out, std::ostream& err) {
  return detail::with_io(cfg, in, out, err, [&](std::istream& is, std::ostream& os) {
    try {
      SimpleGraph g = detail::read_single_graph(is, cfg.in_format);
      double value;
      if (kind == "caterpillar") {
        value = growth_rate(ConstructionKind::caterpillar, g);
      } else if (kind == "fan") {
        value = growth_rate(ConstructionKind::fan, g);
      } else if (kind == "gfan") {
        if (subgraph_path.empty()) throw invalid_input_error("gfan needs --subgraph");
        SimpleGraph h = detail::read_graph_file(subgraph_path);
        value = growth_rate(ConstructionKind::generalized_fan, g, &h);
      } else {
        throw invalid_input_error("unknown rate kind: " + kind);
      }
      std::ostringstream rendered;
      rendered.precision(6);
      rendered << value;
      switch (cfg.out_format) {
        case OutputFormat::json:
          os << nlohmann::json{{"kind", kind}, {"rate", value}}.dump() << "\n";
          break;
        case OutputFormat::csv:
          os << "kind,rate\n" << kind << ',' << rendered.str() << "\n";
          break;
        case OutputFormat::text:
          os << rendered.str() << "\n";
          break;
      }
      return 0;
    } catch (const parse_error& e) {
      err << "parse error: " << e.what() << "\n";
      return 1;
    } catch (const invalid_input_error& e) {
      err << e.what() << "\n";
      return 1;
    } catch (const computation_error& e) {
      err << e.what() << "\n";
      return 2;
    }
  });
}

struct ExportArgs {
  std::optional<Vertex> pin;
  std::uint64_t seed = 1;
  std::string labels_path;
};

inline int run_export_system(const JobConfig& cfg, const ExportArgs& args, std::istream& in,
                             std::ostream& out, std::ostream& err) {
  return detail::with_io(cfg, in, out, err, [&](std::istream& is, std::ostream& os) {
    try {
      SimpleGraph g = detail::read_single_graph(is, cfg.in_format);
      if (g.vertex_count() == 0) throw invalid_input_error("cannot export a system for an empty graph");
      Vertex pin = args.pin.value_or(g.vertices().front());

      Labeling lambda;
      std::optional<Realization> generated;
      if (!args.labels_path.empty()) {
        std::ifstream lf(args.labels_path);
        if (!lf) throw invalid_input_error("cannot open labels file: " + args.labels_path);
        nlohmann::json spec_json = nlohmann::json::parse(lf, nullptr, true, true);
        for (const auto& item : spec_json) {
          Edge e = make_edge(item.at("edge").at(0).get<Vertex>(), item.at("edge").at(1).get<Vertex>());
          lambda.set(e, Complex{item.value("re", 0.0), item.value("im", 0.0)});
        }
      } else {
        std::mt19937_64 rng(args.seed);
        std::uniform_real_distribution<double> coord(-1.0, 1.0);
        Realization rho;
        for (Vertex v : g.vertices()) rho.set(v, CPoint{Complex{coord(rng), 0.0}, Complex{coord(rng), 0.0}});
        lambda = labeling_from_realization(g, rho);
        generated = std::move(rho);
      }

      PolynomialSystem sys = export_system(g, lambda, pin);
      nlohmann::json j = sys.to_json();
      if (generated) {
        nlohmann::json points = nlohmann::json::object();
        for (const auto& [v, p] : generated->points()) {
          points[std::to_string(v)] = {{"x", {{"re", p.x.real()}, {"im", p.x.imag()}}},
                                       {"y", {{"re", p.y.real()}, {"im", p.y.imag()}}}};
        }
        j["realization"] = points;
      }
      os << (cfg.out_format == OutputFormat::json ? j.dump() : j.dump(2)) << "\n";
      return 0;
    } catch (const nlohmann::json::exception& e) {
      err << "labels file: " << e.what() << "\n";
      return 1;
    } catch (const parse_error& e) {
      err << "parse error: " << e.what() << "\n";
      return 1;
    } catch (const invalid_input_error& e) {
      err << e.what() << "\n";
      return 1;
    }
  });
}

inline int run_dataset(const JobConfig& cfg, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  return detail::with_io(cfg, in, out, err, [&](std::istream&, std::ostream& os) {
    static const char* order[] = {"triangle", "h1", "h2", "h3", "f6", "f7",
                                  "f8",       "f9", "f10", "f11", "f12"};
    if (cfg.out_format == OutputFormat::csv) os << "name,n,m,expected,graph\n";
    for (const char* name : order) {
      const Fixture& fx = fixtures().at(name);
      std::string g6 = write_graph6(fx.graph);
      switch (cfg.out_format) {
        case OutputFormat::json:
          os << nlohmann::json{{"name", name},
                               {"n", fx.graph.vertex_count()},
                               {"m", fx.graph.edge_count()},
                               {"expected", fx.expected},
                               {"graph", g6}}
                    .dump()
             << "\n";
          break;
        case OutputFormat::csv:
          os << name << ',' << fx.graph.vertex_count() << ',' << fx.graph.edge_count() << ','
             << fx.expected << ',' << detail::csv_cell(g6) << "\n";
          break;
        case OutputFormat::text:
          os << name << " n=" << fx.graph.vertex_count() << " m=" << fx.graph.edge_count()
             << " laman_number=" << fx.expected << " graph=" << g6 << "\n";
          break;
      }
    }
    return 0;
  });
}

}  // namespace laman
