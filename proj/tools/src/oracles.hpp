#pragma once

#include "grundylab/graph.hpp"

namespace grundylab::oracles {

// Brute-force references for the oracle subcommand, deliberately independent
// of the library solvers: greedy coloring over every vertex ordering,
// domination over every vertex subset, star partition by exact-cover DP over
// vertex masks. Each throws std::invalid_argument beyond its size guard.
int grundy_all_orderings(const Graph& g, int max_n = 10);
int gamma_all_subsets(const Graph& g, int max_n = 20);
int star_partition_dp(const Graph& g, int max_n = 16);

}  // namespace grundylab::oracles
