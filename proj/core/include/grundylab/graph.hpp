#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace grundylab {

// Girth of a graph: length of a shortest cycle, or infinite for forests.
// The infinite case is an explicit state, never a sentinel integer.
class Girth {
public:
  static Girth infinite() { return Girth{}; }
  static Girth finite(int length);

  bool is_finite() const { return v_.has_value(); }
  // Only valid for finite girth; throws std::logic_error otherwise.
  int value() const;
  bool is_odd() const { return is_finite() && (*v_ % 2 == 1); }
  bool is_even() const { return is_finite() && (*v_ % 2 == 0); }

  bool operator==(const Girth&) const = default;

private:
  Girth() = default;
  std::optional<int> v_;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// adjacency lists are kept sorted. Parallel edges collapse, self loops are
// rejected.
class Graph {
public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const;
  int min_degree() const;
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

  bool is_triangle_free() const;  // adjacency intersection, independent of girth()
  bool is_connected() const;      // n == 0 counts as connected
  // Exact: per-root BFS, minimum closing-edge cycle length over all roots.
  Girth girth() const;

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_id;  // original_id[new vertex] = vertex in the source graph
};

// Vertices may be given in any order; duplicates are rejected. The returned
// graph relabels them 0..|S|-1 in ascending original order.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace grundylab
