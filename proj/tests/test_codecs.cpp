#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "laman/codecs.hpp"
#include "laman/canonical.hpp"
#include "laman/constructions.hpp"
#include "support.hpp"

using laman::Edge;
using laman::InputFormat;
using laman::SimpleGraph;
using laman::Vertex;

namespace {

SimpleGraph random_graph(std::mt19937_64& rng, int max_n) {
  int n = std::uniform_int_distribution<int>(0, max_n)(rng);
  std::vector<Vertex> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (std::bernoulli_distribution(0.3)(rng)) edges.push_back({u, v});
    }
  }
  return SimpleGraph::from_edges(edges, vs);
}

}  // namespace

TEST_CASE("graph6 decodes known strings") {
  SECTION("triangle") {
    SimpleGraph g = laman::parse_graph6("Bw");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  }
  SECTION("four vertices missing one edge") {
    SimpleGraph g = laman::parse_graph6("C^");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  }
  SECTION("tiny graphs") {
    CHECK(laman::parse_graph6("@").vertex_count() == 1);
    CHECK(laman::parse_graph6("@").edge_count() == 0);
    CHECK(laman::parse_graph6("?").vertex_count() == 0);
    CHECK(laman::parse_graph6("A_").edges() == std::vector<Edge>{{0, 1}});
    CHECK(laman::parse_graph6("A?").edge_count() == 0);
  }
}

TEST_CASE("graph6 encode and decode round-trip") {
  std::mt19937_64 rng(20240917);
  SECTION("random graphs up to 70 vertices") {
    for (int trial = 0; trial < 1000; ++trial) {
      SimpleGraph g = random_graph(rng, 70);
      std::string enc = laman::write_graph6(g);
      CAPTURE(trial, enc);
      SimpleGraph back = laman::parse_graph6(enc);
      REQUIRE(back == g);
      if (g.vertex_count() > 62) {
        REQUIRE(enc.size() >= 4);
        REQUIRE(enc[0] == '~');
      }
    }
  }
  SECTION("wide size prefix") {
    std::vector<Vertex> vs(100);
    for (int i = 0; i < 100; ++i) vs[i] = i;
    SimpleGraph g = SimpleGraph::from_edges({{0, 99}, {40, 41}}, vs);
    std::string enc = laman::write_graph6(g);
    CHECK(enc[0] == '~');
    CHECK(laman::parse_graph6(enc) == g);
  }
  SECTION("vertex ids must be dense") {
    SimpleGraph g = SimpleGraph::from_edges({{0, 2}});
    CHECK_THROWS_AS(laman::write_graph6(g), laman::invalid_input_error);
    CHECK_NOTHROW(laman::write_graph6(g.densified()));
  }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  using Catch::Matchers::ContainsSubstring;
  CHECK_THROWS_AS(laman::parse_graph6(""), laman::parse_error);
  CHECK_THROWS_WITH(laman::parse_graph6("~~????"), ContainsSubstring("(at 1)"));
  CHECK_THROWS_AS(laman::parse_graph6("~A"), laman::parse_error);
  // Declared 3 vertices but no body byte.
  CHECK_THROWS_WITH(laman::parse_graph6("B"), ContainsSubstring("length"));
  CHECK_THROWS_WITH(laman::parse_graph6("Bww"), ContainsSubstring("length"));
  // Space (0x20) sits below the graph6 byte range.
  CHECK_THROWS_WITH(laman::parse_graph6("B "), ContainsSubstring("63..126"));
  // n=2 leaves five padding bits; 'O' sets one of them.
  CHECK_THROWS_WITH(laman::parse_graph6("AO"), ContainsSubstring("padding"));
  CHECK_THROWS_WITH(laman::parse_graph6("AO"), ContainsSubstring("(at 1)"));
}

TEST_CASE("edge list parsing") {
  SECTION("comments and blank lines") {
    SimpleGraph g = laman::parse_edge_list("# triangle\n0 1\n\n1 2\n0 2 # closing edge\n");
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  }
  SECTION("order and orientation are normalized") {
    CHECK(laman::parse_edge_list("2 1\n1 0\n2 0\n") == laman::parse_edge_list("0 1\n0 2\n1 2\n"));
  }
  SECTION("errors report 1-based line numbers") {
    using Catch::Matchers::ContainsSubstring;
    CHECK_THROWS_AS(laman::parse_edge_list("0 1\n2\n"), laman::parse_error);
    CHECK_THROWS_WITH(laman::parse_edge_list("0 1\n2\n"), ContainsSubstring("(at 2)"));
    CHECK_THROWS_WITH(laman::parse_edge_list("0 1 2\n"), ContainsSubstring("(at 1)"));
    CHECK_THROWS_WITH(laman::parse_edge_list("0 1\n\n# c\n3 3\n"), ContainsSubstring("(at 4)"));
    CHECK_THROWS_WITH(laman::parse_edge_list("0 1\n1 0\n"), ContainsSubstring("duplicate"));
    CHECK_THROWS_WITH(laman::parse_edge_list("0 x\n"), ContainsSubstring("malformed"));
    CHECK_THROWS_WITH(laman::parse_edge_list("-1 2\n"), ContainsSubstring("malformed"));
    CHECK_THROWS_WITH(laman::parse_edge_list("0 1234567890\n"), ContainsSubstring("malformed"));
  }
  SECTION("write and parse round-trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      SimpleGraph g = testsup::random_laman(rng, 8);
      CHECK(laman::parse_edge_list(laman::write_edge_list(g)) == g);
    }
  }
}

TEST_CASE("shipped edge-list files match the embedded dataset") {
  for (const auto& [name, fixture] : laman::fixtures()) {
    CAPTURE(name);
    SimpleGraph from_file = testsup::load_fixture_file(name);
    CHECK(from_file == fixture.graph);
    // The two codecs must agree on the same graph.
    CHECK(laman::parse_graph6(laman::write_graph6(from_file)) == from_file);
    CHECK(laman::canonical_key(laman::parse_graph6(laman::write_graph6(from_file))) ==
          laman::canonical_key(fixture.graph));
  }
}

TEST_CASE("format sniffing") {
  CHECK(laman::sniff_format("Bw") == InputFormat::graph6);
  CHECK(laman::sniff_format("~??~?????") == InputFormat::graph6);
  CHECK(laman::sniff_format("0 1") == InputFormat::edge_list);
  CHECK(laman::sniff_format("# comment") == InputFormat::edge_list);
  CHECK(laman::sniff_format("12") == InputFormat::edge_list);
  CHECK(laman::sniff_format("") == InputFormat::edge_list);
}

TEST_CASE("graph streams") {
  SECTION("graph6 lines with CRLF and blanks") {
    std::istringstream in("Bw\r\n\nC^\n\nBw\n");
    laman::GraphStream s(in, InputFormat::graph6);
    auto a = s.next();
    REQUIRE(a);
    CHECK(a->first == 1);
    CHECK(a->second.vertex_count() == 3);
    auto b = s.next();
    REQUIRE(b);
    CHECK(b->first == 2);
    CHECK(b->second.vertex_count() == 4);
    auto c = s.next();
    REQUIRE(c);
    CHECK(c->first == 3);
    CHECK_FALSE(s.next());
  }
  SECTION("auto-detect picks graph6 from the first line") {
    std::istringstream in("Bw\nC^\n");
    laman::GraphStream s(in, InputFormat::auto_detect);
    CHECK(s.next()->second.vertex_count() == 3);
    CHECK(s.next()->second.vertex_count() == 4);
  }
  SECTION("auto-detect slurps an edge list as one graph") {
    std::istringstream in("# triangle\n0 1\n1 2\n0 2\n");
    laman::GraphStream s(in, InputFormat::auto_detect);
    auto g = s.next();
    REQUIRE(g);
    CHECK(g->first == 1);
    CHECK(g->second.edge_count() == 3);
    CHECK_FALSE(s.next());
  }
  SECTION("explicit edge-list mode") {
    std::istringstream in("0 1\n1 2\n");
    laman::GraphStream s(in, InputFormat::edge_list);
    auto g = s.next();
    REQUIRE(g);
    CHECK(g->second.edge_count() == 2);
    CHECK_FALSE(s.next());
  }
  SECTION("a bad line throws but does not kill the stream") {
    std::istringstream in("Bw\nB w\nC^\n");
    laman::GraphStream s(in, InputFormat::graph6);
    CHECK(s.next()->second.vertex_count() == 3);
    CHECK_THROWS_AS(s.next(), laman::parse_error);
    auto rest = s.next();
    REQUIRE(rest);
    CHECK(rest->second.vertex_count() == 4);
  }
  SECTION("raw line access skips blanks and strips CR") {
    std::istringstream in("Bw\r\n\n  \nC^\n");
    laman::GraphStream s(in, InputFormat::graph6);
    auto a = s.next_line();
    REQUIRE(a);
    CHECK(a->first == 1);
    CHECK(a->second == "Bw");
    auto b = s.next_line();
    REQUIRE(b);
    CHECK(b->second == "  ");
    CHECK(s.next_line()->second == "C^");
    CHECK_FALSE(s.next_line());
  }
}
