#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "grundylab/bounds.hpp"
#include "grundylab/coloring.hpp"
#include "grundylab/domination.hpp"
#include "grundylab/generators.hpp"
#include "grundylab/graph.hpp"
#include "test_util.hpp"

using namespace grundylab;

TEST_CASE("extremal even family") {
  CHECK(testutil::tree_canonical(extremal_even(2).graph) == testutil::tree_canonical(path(4)));
  for (int t = 2; t <= 8; ++t) {
    LabeledGraph lg = extremal_even(t);
    const Graph& g = lg.graph;
    CHECK(g.vertex_count() == 2 * t);
    CHECK(g.edge_count() == t * t - (t - 1));
    CHECK(g.is_connected());
    CHECK(g.is_triangle_free());
    CHECK(g.max_degree() == t);
    if (t >= 3) CHECK(g.girth() == Girth::finite(4));
    CHECK(lg.coloring.num_colors == t + 1);
    std::string reason;
    bool ok = is_grundy_coloring(g, lg.coloring, &reason);
    INFO(reason);
    CHECK(ok);
  }
  for (int t = 2; t <= 6; ++t) {
    LabeledGraph lg = extremal_even(t);
    CHECK(grundy_number_exact(lg.graph).k == t + 1);
    CHECK(domination_number_exact(lg.graph).gamma == 2);
  }
  CHECK_THROWS_AS(extremal_even(1), std::invalid_argument);
}

TEST_CASE("extremal odd family") {
  for (int t = 3; t <= 8; ++t) {
    LabeledGraph lg = extremal_odd(t);
    const Graph& g = lg.graph;
    CHECK(g.vertex_count() == 2 * t + 1);
    CHECK(g.is_connected());
    CHECK(g.is_triangle_free());
    CHECK(lg.coloring.num_colors == t + 1);
    std::string reason;
    bool ok = is_grundy_coloring(g, lg.coloring, &reason);
    INFO(reason);
    CHECK(ok);
  }
  for (int t = 3; t <= 6; ++t) {
    Graph g = extremal_odd(t).graph;
    const int grundy = grundy_number_exact(g).k;
    const int gamma = domination_number_exact(g).gamma;
    CHECK(grundy == t + 1);
    CHECK(gamma == 3);
    CHECK(star_partition_number_exact(g).s == 3);
    // the triangle-free bound lands exactly: (n - gamma + 4) / 2 = t + 1
    CHECK(g.vertex_count() - gamma + 4 == 2 * grundy);
  }
  CHECK_THROWS_AS(extremal_odd(2), std::invalid_argument);
}

TEST_CASE("prop gamma equality family") {
  for (int q = 1; q <= 5; ++q)
    for (int d = 1; d <= q && d <= 4; ++d) {
      Graph g = prop_gamma_equality(q, d);
      CHECK(g.vertex_count() == q + d);
      const int gamma = domination_number_exact(g).gamma;
      const int grundy = grundy_number_exact(g).k;
      CHECK(gamma == d);
      CHECK(grundy == q + 1);
      CHECK(grundy == g.vertex_count() - gamma + 1);
      CHECK(equality_characterization_holds(g, gamma, grundy));
    }
  CHECK_THROWS_AS(prop_gamma_equality(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(prop_gamma_equality(3, 0), std::invalid_argument);
}

TEST_CASE("standard graphs") {
  Graph pet = petersen();
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(pet.min_degree() == 3);
  CHECK(pet.max_degree() == 3);
  CHECK(pet.girth() == Girth::finite(5));
  CHECK(pet.is_connected());

  CHECK(cycle(3).girth() == Girth::finite(3));
  CHECK(cycle(6).edge_count() == 6);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK(path(0).vertex_count() == 0);
  CHECK(path(1).edge_count() == 0);
  CHECK(path(6).edge_count() == 5);
  CHECK(complete(4).edge_count() == 6);
  CHECK(complete(0).vertex_count() == 0);
  Graph kb = complete_bipartite(2, 3);
  CHECK(kb.vertex_count() == 5);
  CHECK(kb.edge_count() == 6);
  CHECK(kb.is_triangle_free());
  CHECK(kb.girth() == Girth::finite(4));
  CHECK(complete_bipartite(1, 3).girth() == Girth::infinite());
  CHECK(complete_bipartite(0, 3).edge_count() == 0);
}

TEST_CASE("random graph sampling") {
  Graph a = random_graph(10, 0.3, 99);
  Graph b = random_graph(10, 0.3, 99);
  CHECK(a.edges() == b.edges());
  Graph c = random_graph(10, 0.3, 100);
  CHECK(a.edges() != c.edges());  // astronomically unlikely to collide

  CHECK(random_graph(8, 0.0, 5).edge_count() == 0);
  CHECK(random_graph(8, 1.0, 5).edge_count() == 28);
  CHECK(random_graph(0, 0.5, 5).vertex_count() == 0);
  CHECK_THROWS_AS(random_graph(5, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_graph(5, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_graph(-1, 0.5, 1), std::invalid_argument);

  // mean edge count over many seeds tracks p * C(n,2) = 13.5
  double total = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    total += random_graph(10, 0.3, seed).edge_count();
  CHECK(std::fabs(total / 1000.0 - 13.5) < 0.6);
}

TEST_CASE("random sampling with a girth floor") {
  auto got = random_with_min_girth(9, 0.25, 5, 12345, 200);
  REQUIRE(got.has_value());
  Girth gi = got->girth();
  CHECK((!gi.is_finite() || gi.value() >= 5));

  auto again = random_with_min_girth(9, 0.25, 5, 12345, 200);
  REQUIRE(again.has_value());
  CHECK(got->edges() == again->edges());

  // dense samples never clear a girth floor of 7
  CHECK(!random_with_min_girth(12, 0.9, 7, 3, 3).has_value());
  CHECK_THROWS_AS(random_with_min_girth(9, 0.25, 2, 1, 5), std::invalid_argument);
}
