#pragma once

#include <cstdint>
#include <optional>

#include "grundylab/coloring.hpp"
#include "grundylab/graph.hpp"

namespace grundylab {

struct LabeledGraph {
  Graph graph;
  Coloring coloring;  // the intended Grundy labeling
};

// K_{t,t} minus the matching {(x_i, y_i) : i >= 2}, so the designated pair
// x_1, y_1 stays adjacent and full degree. Ids: x_i -> i-1, y_j -> t+j-1.
// Labeling: x_1 -> t+1 and x_i -> t-i+1 for i >= 2; y_j -> t-j+1.
LabeledGraph extremal_even(int t);  // t >= 2, n = 2t

// extremal_even(t) plus a pendant vertex w of color 1 (id 2t): the edge
// between x_t (color 1) and y_{t-1} (color 2) is replaced by (w, y_{t-1}).
LabeledGraph extremal_odd(int t);  // t >= 3, n = 2t + 1

// Clique on 0..q-1 plus independent leaves q..q+d-1: leaf q+i hangs off
// clique vertex i, and clique vertices d..q-1 attach to leaf q so the leaves
// dominate. Yields grundy = q+1 = n - gamma + 1 with gamma = d.
Graph prop_gamma_equality(int q, int d);  // 1 <= d <= q

Graph cycle(int n);                      // n >= 3
Graph path(int n);                       // n >= 0
Graph complete(int n);                   // n >= 0
Graph complete_bipartite(int a, int b);  // a, b >= 0; parts 0..a-1 and a..a+b-1
Graph petersen();

// Erdos-Renyi sample: vertex pairs scanned in lexicographic order, one
// SplitMix64 draw per pair, edge kept when the draw falls below p.
Graph random_graph(int n, double p, std::uint64_t seed);

// Retries random_graph with seeds seed, seed+1, ... until the sample has no
// cycle shorter than gmin (acyclic passes). nullopt once attempts run out.
std::optional<Graph> random_with_min_girth(int n, double p, int gmin, std::uint64_t seed,
                                           int max_attempts);

}  // namespace grundylab
