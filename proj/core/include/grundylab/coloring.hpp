#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grundylab/graph.hpp"

namespace grundylab {

// Proper coloring with colors 1..num_colors; num_colors is the largest color
// actually assigned (0 for the empty graph).
struct Coloring {
  std::vector<int> colors;
  int num_colors = 0;
};

// Result of a Grundy number computation. `coloring` is a Grundy coloring of
// the whole graph using exactly k colors. When `exact` is false the solver
// ran out of budget and k is only a lower bound, with `upper_bound` the best
// upper bound proved; when `exact` is true, upper_bound == k.
struct GrundyResult {
  int k = 0;
  Coloring coloring;
  std::optional<std::vector<int>> ordering;  // first_fit(g, *ordering) uses exactly k colors
  bool exact = true;
  int upper_bound = 0;
};

// Greedy coloring along `ordering` (a permutation of 0..n-1): each vertex
// takes the smallest color absent from its already-colored neighbors.
Coloring first_fit(const Graph& g, const std::vector<int>& ordering);

// True iff `c` colors every vertex, is proper, and every vertex of color j
// has a neighbor of each color 1..j-1. A malformed coloring yields false
// with a diagnostic in *reason (if given), never an exception.
bool is_grundy_coloring(const Graph& g, const Coloring& c, std::string* reason = nullptr);

// Reference oracle: maximum first-fit value over all n! orderings.
// Guarded by `max_n` (factorial blowup); throws std::invalid_argument beyond.
GrundyResult grundy_number_bruteforce(const Graph& g, int max_n = 9);

struct GrundyOptions {
  std::int64_t budget_ms = 0;        // 0 = no budget
  std::optional<int> known_gamma;    // reuse a precomputed domination number
};

// Exact Grundy number. Depth-first construction of Grundy colorings by
// color-class extension, pruned by the Delta+1, n-gamma+1, triangle-free and
// girth upper bounds. With a budget set, may return a bracketed result.
GrundyResult grundy_number_exact(const Graph& g, const GrundyOptions& options = {});

// The k-th tree atom: T_1 = K_1, and T_k attaches one new leaf to every
// vertex of T_{k-1}, so |V(T_k)| = 2^(k-1). Existing ids are preserved; the
// leaf attached to vertex v gets id |V(T_{k-1})| + v.
Graph tree_atom(int k);

}  // namespace grundylab
