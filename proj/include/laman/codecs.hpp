#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "laman/errors.hpp"
#include "laman/graph.hpp"

namespace laman {

/// Decodes one graph6 line: a length prefix (single byte n+63 for n <= 62,
/// '~' plus three bytes carrying 18 bits for larger n), then the upper
/// triangle of the adjacency matrix in column-major order, packed big-endian
/// into 6-bit groups, each emitted as one byte with 63 added.
inline SimpleGraph parse_graph6(const std::string& line) {
  if (line.empty()) throw parse_error("empty graph6 line", 0);
  auto check_byte = [&](std::size_t at) -> int {
    unsigned char c = static_cast<unsigned char>(line[at]);
    if (c < 63 || c > 126) throw parse_error("graph6 byte out of range 63..126", at);
    return c - 63;
  };

  std::size_t pos = 0;
  long n;
  if (static_cast<unsigned char>(line[0]) == 126) {
    if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126) {
      throw parse_error("graph6 sizes beyond 18 bits are not supported", 1);
    }
    if (line.size() < 4) throw parse_error("truncated graph6 size prefix", line.size());
    n = (static_cast<long>(check_byte(1)) << 12) | (check_byte(2) << 6) | check_byte(3);
    pos = 4;
  } else {
    n = check_byte(0);
    pos = 1;
  }

  const long nbits = n * (n - 1) / 2;
  const std::size_t groups = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() != pos + groups) {
    throw parse_error("graph6 body length does not match the declared vertex count",
                      std::min(line.size(), pos + groups));
  }

  std::vector<Edge> edges;
  long k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      std::size_t at = pos + static_cast<std::size_t>(k / 6);
      int group = check_byte(at);
      if ((group >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  // Every padding bit must be zero; also validates trailing byte ranges.
  for (; k < static_cast<long>(groups) * 6; ++k) {
    std::size_t at = pos + static_cast<std::size_t>(k / 6);
    if ((check_byte(at) >> (5 - k % 6)) & 1) throw parse_error("nonzero graph6 padding bits", at);
  }

  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = static_cast<Vertex>(i);
  return SimpleGraph::from_edges(edges, all);
}

inline std::string write_graph6(const SimpleGraph& g) {
  if (!g.has_dense_ids()) throw invalid_input_error("graph6 requires vertex ids 0..n-1");
  const long n = g.vertex_count();
  if (n > 258047) throw invalid_input_error("graph6 sizes beyond 18 bits are not supported");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }

  int group = 0, filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

/// Edge-list format: one "u v" pair per line, '#' starts a comment, blank
/// lines are skipped. Parse errors carry the 1-based line number.
inline SimpleGraph parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw parse_error("expected exactly two vertex ids per line", lineno);
    }
    auto to_vertex = [&](const std::string& tok) -> Vertex {
      if (tok.empty() || tok.size() > 9) throw parse_error("malformed vertex id '" + tok + "'", lineno);
      long v = 0;
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw parse_error("malformed vertex id '" + tok + "'", lineno);
        }
        v = v * 10 + (c - '0');
      }
      return static_cast<Vertex>(v);
    };
    Vertex u = to_vertex(a), v = to_vertex(b);
    if (u == v) throw parse_error("self-loop " + a + " " + b, lineno);
    Edge e = make_edge(u, v);
    for (const Edge& seen : edges) {
      if (seen == e) throw parse_error("duplicate edge " + a + " " + b, lineno);
    }
    edges.push_back(e);
  }
  return SimpleGraph::from_edges(edges);
}

inline std::string write_edge_list(const SimpleGraph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

enum class InputFormat { auto_detect, graph6, edge_list };

/// A graph6 line uses only bytes 63..126, so any digit, space, or '#'
/// identifies an edge list.
inline InputFormat sniff_format(const std::string& first_line) {
  for (unsigned char c : first_line) {
    if (c < 63 || c > 126) return InputFormat::edge_list;
  }
  return first_line.empty() ? InputFormat::edge_list : InputFormat::graph6;
}

/// Streams graphs out of a text source: one per line for graph6, the whole
/// source as a single graph for edge lists. Intended for one reading task;
/// consumers may run concurrently on the yielded graphs.
class GraphStream {
 public:
  GraphStream(std::istream& in, InputFormat format) : in_(in), format_(format) {}

  /// Next graph with its 1-based input index; parse errors propagate with
  /// the stream position already recorded in the exception.
  std::optional<std::pair<std::size_t, SimpleGraph>> next() {
    if (format_ == InputFormat::edge_list) {
      if (done_) return std::nullopt;
      done_ = true;
      std::ostringstream all;
      all << in_.rdbuf();
      return std::pair{std::size_t{1}, parse_edge_list(all.str())};
    }
    std::string line;
    while (std::getline(in_, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      ++lineno_;
      if (line.empty()) continue;
      if (format_ == InputFormat::auto_detect) {
        format_ = sniff_format(line);
        if (format_ == InputFormat::edge_list) {
          std::ostringstream rest;
          rest << line << '\n' << in_.rdbuf();
          done_ = true;
          return std::pair{std::size_t{1}, parse_edge_list(rest.str())};
        }
      }
      return std::pair{++count_, parse_graph6(line)};
    }
    return std::nullopt;
  }

  /// Raw line variant used by the batch runner so parse errors can be
  /// reported per line without stopping the stream.
  std::optional<std::pair<std::size_t, std::string>> next_line() {
    std::string line;
    while (std::getline(in_, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      return std::pair{++count_, line};
    }
    return std::nullopt;
  }

 private:
  std::istream& in_;
  InputFormat format_;
  bool done_ = false;
  std::size_t lineno_ = 0;
  std::size_t count_ = 0;
};

}  // namespace laman
