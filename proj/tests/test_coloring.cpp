#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "grundylab/coloring.hpp"
#include "grundylab/generators.hpp"
#include "grundylab/graph.hpp"
#include "grundylab/prng.hpp"
#include "test_util.hpp"

using namespace grundylab;

TEST_CASE("first fit on fixed orderings") {
  Graph p4 = path(4);
  Coloring a = first_fit(p4, {0, 3, 1, 2});
  CHECK(a.colors == std::vector<int>{1, 2, 3, 1});
  CHECK(a.num_colors == 3);
  Coloring b = first_fit(p4, {0, 1, 2, 3});
  CHECK(b.colors == std::vector<int>{1, 2, 1, 2});
  CHECK(b.num_colors == 2);

  Graph k3 = complete(3);
  std::vector<int> order{0, 1, 2};
  do
    CHECK(first_fit(k3, order).num_colors == 3);
  while (std::next_permutation(order.begin(), order.end()));

  CHECK(first_fit(Graph(0, {}), {}).num_colors == 0);
  CHECK_THROWS_AS(first_fit(p4, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(first_fit(p4, {0, 1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(first_fit(p4, {0, 1, 2, 4}), std::invalid_argument);
}

TEST_CASE("grundy coloring validation") {
  CHECK(is_grundy_coloring(cycle(6), Coloring{{1, 2, 3, 1, 2, 3}, 3}));
  CHECK(is_grundy_coloring(path(4), Coloring{{1, 2, 1, 2}, 2}));

  std::string reason;
  CHECK(!is_grundy_coloring(path(4), Coloring{{1, 3, 1, 2}, 3}, &reason));
  CHECK(!reason.empty());
  CHECK(!is_grundy_coloring(path(4), Coloring{{1, 1, 1, 2}, 2}));    // improper
  CHECK(!is_grundy_coloring(path(4), Coloring{{1, 2, 1}, 2}));      // wrong size
  CHECK(!is_grundy_coloring(path(4), Coloring{{1, 2, 1, 0}, 2}));   // color 0
  CHECK(!is_grundy_coloring(path(4), Coloring{{1, 2, 1, 2}, 3}));   // num_colors not attained
}

TEST_CASE("every greedy coloring is a Grundy coloring") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(9));
    Graph g = random_graph(n, 0.4, rng.next());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i) + 1))]);
    Coloring c = first_fit(g, order);
    std::string reason;
    bool ok = is_grundy_coloring(g, c, &reason);
    INFO(reason);
    CHECK(ok);
  }
}

TEST_CASE("bruteforce grundy on knowns") {
  CHECK(grundy_number_bruteforce(path(4)).k == 3);
  CHECK(grundy_number_bruteforce(cycle(4)).k == 2);
  for (int n = 1; n <= 7; ++n) CHECK(grundy_number_bruteforce(complete(n)).k == n);
  CHECK(grundy_number_bruteforce(Graph(0, {})).k == 0);
  CHECK_THROWS_AS(grundy_number_bruteforce(complete(10)), std::invalid_argument);
  GrundyResult r = grundy_number_bruteforce(cycle(6));
  CHECK(r.k == 3);
  REQUIRE(r.ordering.has_value());
  CHECK(first_fit(cycle(6), *r.ordering).num_colors == 3);
  CHECK(is_grundy_coloring(cycle(6), r.coloring));
}

TEST_CASE("exact solver agrees with brute force on every 5-vertex graph") {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (1u << i)) edges.push_back(pairs[i]);
    Graph g(5, edges);
    GrundyResult exact = grundy_number_exact(g);
    REQUIRE(exact.exact);
    CHECK(exact.k == testutil::grundy_oracle(g));
    CHECK(is_grundy_coloring(g, exact.coloring));
    CHECK(exact.coloring.num_colors == exact.k);
  }
}

TEST_CASE("exact solver agrees with brute force on random graphs up to n = 8") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 6 + static_cast<int>(rng.next_below(3));
    const double p = 0.15 + 0.1 * static_cast<double>(rng.next_below(7));
    Graph g = random_graph(n, p, rng.next());
    GrundyResult exact = grundy_number_exact(g);
    REQUIRE(exact.exact);
    CHECK(exact.k == testutil::grundy_oracle(g));
    CHECK(exact.upper_bound == exact.k);
    REQUIRE(exact.ordering.has_value());
    CHECK(first_fit(g, *exact.ordering).num_colors == exact.k);
  }
}

TEST_CASE("exact solver on fixtures") {
  CHECK(grundy_number_exact(petersen()).k == 4);
  CHECK(grundy_number_exact(extremal_even(3).graph).k == 4);
  CHECK(grundy_number_exact(cycle(6)).k == 3);
  CHECK(grundy_number_exact(Graph(0, {})).k == 0);
  CHECK(grundy_number_exact(Graph(3, {})).k == 1);
  GrundyOptions with_gamma;
  with_gamma.known_gamma = 3;
  CHECK(grundy_number_exact(petersen(), with_gamma).k == 4);
  GrundyOptions bad_gamma;
  bad_gamma.known_gamma = 0;
  CHECK_THROWS_AS(grundy_number_exact(petersen(), bad_gamma), std::invalid_argument);
}

TEST_CASE("grundy is monotone under induced subgraphs") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(8, 0.4, rng.next());
    const int whole = grundy_number_exact(g).k;
    std::vector<int> keep;
    for (int v = 0; v < 8; ++v)
      if (rng.next_below(2)) keep.push_back(v);
    Graph sub = induced_subgraph(g, keep).graph;
    CHECK(grundy_number_exact(sub).k <= whole);
  }
}

TEST_CASE("delta plus one holds on a corpus") {
  SplitMix64 rng(123);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(9, 0.45, rng.next());
    CHECK(grundy_number_exact(g).k <= g.max_degree() + 1);
  }
}

TEST_CASE("budgeted solve brackets instead of lying") {
  Graph g = random_graph(60, 0.5, 31);
  GrundyOptions o;
  o.budget_ms = 1;
  GrundyResult r = grundy_number_exact(g, o);
  CHECK(!r.exact);
  CHECK(r.k <= r.upper_bound);
  CHECK(r.k >= 1);
  CHECK(is_grundy_coloring(g, r.coloring));
  CHECK(r.coloring.num_colors == r.k);
}

TEST_CASE("tree atoms") {
  CHECK(tree_atom(1).vertex_count() == 1);
  CHECK(testutil::tree_canonical(tree_atom(2)) == testutil::tree_canonical(path(2)));
  CHECK(testutil::tree_canonical(tree_atom(3)) == testutil::tree_canonical(path(4)));
  for (int k = 1; k <= 10; ++k) {
    Graph t = tree_atom(k);
    CHECK(t.vertex_count() == (1 << (k - 1)));
    CHECK(t.edge_count() == t.vertex_count() - 1);
    CHECK(t.is_connected());
  }
  // T_k is T_{k-1} with one new leaf per vertex, ids preserved
  Graph t4 = tree_atom(4);
  Graph t3 = tree_atom(3);
  std::vector<std::pair<int, int>> edges = t3.edges();
  for (int v = 0; v < t3.vertex_count(); ++v) edges.emplace_back(v, t3.vertex_count() + v);
  CHECK(t4.edges() == Graph(8, edges).edges());
  for (int k = 1; k <= 7; ++k) CHECK(grundy_number_exact(tree_atom(k)).k == k);
  CHECK_THROWS_AS(tree_atom(0), std::invalid_argument);
  CHECK_THROWS_AS(tree_atom(22), std::invalid_argument);
}
