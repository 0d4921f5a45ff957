#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "grundylab/generators.hpp"
#include "grundylab/graph.hpp"
#include "grundylab/graph_io.hpp"
#include "test_util.hpp"

using namespace grundylab;

TEST_CASE("graph construction normalizes edges") {
  Graph g(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {1, 2}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);  // parallel edges collapse
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.has_edge(3, 2));
  CHECK(!g.has_edge(0, 3));
  CHECK(g.degree(1) == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.min_degree() == 1);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("connectivity and triangle freeness") {
  CHECK(Graph(0, {}).is_connected());
  CHECK(Graph(1, {}).is_connected());
  CHECK(!Graph(2, {}).is_connected());
  CHECK(cycle(5).is_connected());
  CHECK(cycle(5).is_triangle_free());
  CHECK(!complete(3).is_triangle_free());
  CHECK(complete_bipartite(3, 3).is_triangle_free());

  // brute triple check on a random corpus
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_graph(8, 0.35, seed);
    bool has_triangle = false;
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        for (int c = b + 1; c < 8; ++c)
          if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) has_triangle = true;
    CHECK(g.is_triangle_free() == !has_triangle);
  }
}

TEST_CASE("girth on known graphs") {
  CHECK(Graph(5, {}).girth() == Girth::infinite());
  CHECK(path(6).girth() == Girth::infinite());
  CHECK(!path(6).girth().is_finite());
  CHECK_THROWS_AS(Girth::infinite().value(), std::logic_error);
  for (int n = 3; n <= 9; ++n) CHECK(cycle(n).girth() == Girth::finite(n));
  CHECK(complete(4).girth() == Girth::finite(3));
  CHECK(complete_bipartite(2, 3).girth() == Girth::finite(4));
  CHECK(petersen().girth() == Girth::finite(5));
  CHECK(Girth::finite(5).is_odd());
  CHECK(Girth::finite(6).is_even());
  CHECK_THROWS_AS(Girth::finite(2), std::invalid_argument);
}

TEST_CASE("girth matches the induced cycle oracle") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);  // 4..10
    Graph g = random_graph(n, 0.3 + 0.05 * static_cast<double>(seed % 5), seed);
    const int ref = testutil::girth_oracle(g);
    Girth got = g.girth();
    if (ref == 0)
      CHECK(!got.is_finite());
    else
      CHECK(got == Girth::finite(ref));
  }
}

TEST_CASE("induced subgraphs") {
  InducedSubgraph s = induced_subgraph(complete(4), {0, 2, 3});
  CHECK(s.graph.vertex_count() == 3);
  CHECK(s.graph.edge_count() == 3);  // K_3: clique hereditary
  CHECK(s.original_id == std::vector<int>{0, 2, 3});
  InducedSubgraph p = induced_subgraph(cycle(6), {0, 1, 2, 3});
  CHECK(p.graph.edge_count() == 3);  // a path, the closing edge is gone
  CHECK_THROWS_AS(induced_subgraph(cycle(6), {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(cycle(6), {6}), std::invalid_argument);
}

TEST_CASE("graph6 known strings") {
  Graph empty5 = parse_graph6("D??");
  CHECK(empty5.vertex_count() == 5);
  CHECK(empty5.edge_count() == 0);

  Graph c5 = parse_graph6("Dhc");
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.girth() == Girth::finite(5));
  CHECK(serialize_graph6(cycle(5)) == "Dhc");

  Graph k2 = parse_graph6("A_");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(serialize_graph6(Graph(0, {})) == "?");
  CHECK(parse_graph6("?").vertex_count() == 0);
  CHECK(parse_graph6("@").vertex_count() == 1);
}

TEST_CASE("graph6 round trip") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = static_cast<int>(seed * 5 % 63);  // 5 coprime to 63: 40 distinct sizes
    Graph g = random_graph(n, 0.4, seed);
    Graph back = parse_graph6(serialize_graph6(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
  // multi-byte vertex count header
  for (int n : {63, 64, 100}) {
    Graph g = random_graph(n, 0.05, 9);
    Graph back = parse_graph6(serialize_graph6(g));
    CHECK(back.vertex_count() == n);
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("graph6 parse errors carry the byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D"), ParseError);      // truncated bit string
  CHECK_THROWS_AS(parse_graph6("Dhc!"), ParseError);   // junk after the record
  CHECK_THROWS_AS(parse_graph6("D\x07??"), ParseError);  // byte below the alphabet
  try {
    parse_graph6("Dhcc");
  } catch (const ParseError& e) {
    CHECK(e.byte_offset == 3);
  }
}

TEST_CASE("graph6 line reader") {
  std::istringstream in(">>graph6<<Dhc\nA_\n\nD??\n");
  auto graphs = read_graph6_lines(in);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0].edge_count() == 5);
  CHECK(graphs[1].vertex_count() == 2);
  CHECK(graphs[2].edge_count() == 0);
}

TEST_CASE("edge list reader") {
  std::istringstream in("# two fixtures\n4 3\n0 1 1 2\n2 3\n3 3  # a triangle\n0 1 1 2 0 2\n");
  auto graphs = read_edge_list(in);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0].vertex_count() == 4);
  CHECK(graphs[0].edge_count() == 3);
  CHECK(graphs[1].vertex_count() == 3);
  CHECK(graphs[1].edge_count() == 3);

  std::istringstream bad("3 1\n0 7\n");
  CHECK_THROWS_AS(read_edge_list(bad), ParseError);
  std::istringstream cut("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(cut), ParseError);
}

TEST_CASE("input format detection") {
  CHECK(detect_format("4 3") == InputFormat::edge_list);
  CHECK(detect_format("  10 0 ") == InputFormat::edge_list);
  CHECK(detect_format("Dhc") == InputFormat::graph6);
  CHECK(detect_format("?") == InputFormat::graph6);
  CHECK(detect_format(">>graph6<<Dhc") == InputFormat::graph6);
}
