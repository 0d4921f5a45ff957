#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grundylab/domination.hpp"
#include "grundylab/graph.hpp"

namespace grundylab {

// Demand tree behind the girth upper bounds. The root carries color k (in the
// doubled variant two adjacent roots carry k and k-1) and every vertex of
// demanded color j gets one child for each color in 1..j-1 that its existing
// neighbors do not already supply. Levels are 1-based; level 1 is the roots.
struct LeveledWitness {
  Graph graph;
  std::vector<int> level_of;
  std::vector<int> demanded_color;
  std::vector<int> parent;                // -1 for roots
  std::vector<int> roots;                 // 1 id, or 2 adjacent ids if doubled
  std::vector<std::vector<int>> levels;   // levels[i]: ids at level i+1, in id order
  int depth = 0;
  int k = 0;
  bool doubled = false;
};

// The unique demand tree with `depth` levels. Vertices are numbered level by
// level; inside a level children are ordered by descending demanded color,
// then by parent id. Requires k >= 2 (k >= 3 when doubled) and
// 1 <= depth <= k (<= k-1 when doubled), so no level is empty.
LeveledWitness witness_tree(int k, int depth, bool doubled);

// Star partition of the witness tree for girth g. Odd g wants the single-root
// tree of depth (g+1)/2, even g the doubled tree of depth g/2. For g = 3, 1
// (mod 4) the apexes sit on odd levels; for g = 1, 2 (mod 4) each root forms
// a two-vertex star with its color-1 child and the remaining apexes sit on
// even levels.
StarPartition witness_star_partition(const LeveledWitness& w, int g);

// Closed-form sizes for the witness of parameter k and girth g.
struct CountIdentity {
  int k = 0;
  int g = 0;
  int g_mod_4 = 0;
  std::int64_t v_h = 0;       // vertices of the witness tree
  std::int64_t s_prime = 0;   // stars in its partition
  std::int64_t uncovered = 0; // v_h - s_prime, the non-apex vertices
};

// Evaluates the binomial sums; must equal the constructed sizes. Requires
// g >= 5, k >= (g+1)/2 for odd g, k >= (g+2)/2 for even g, and k <= 60.
CountIdentity count_identities(int k, int g);

// Verifies (a/b)^b <= C(a,b) for 1 <= b <= a, exactly in 128-bit integers
// when the terms fit and via log-gamma otherwise.
bool binomial_lower_bound_check(std::int64_t a, std::int64_t b);

// DOT rendering with one rank row per level and demanded colors as labels.
std::string witness_to_dot(const LeveledWitness& w);

}  // namespace grundylab
