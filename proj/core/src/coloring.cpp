#include "grundylab/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grundylab {

namespace {

void check_permutation(int n, const std::vector<int>& ordering) {
  if (static_cast<int>(ordering.size()) != n)
    throw std::invalid_argument("ordering has " + std::to_string(ordering.size()) +
                                " entries, expected " + std::to_string(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : ordering) {
    if (v < 0 || v >= n) throw std::invalid_argument("ordering entry " + std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("ordering repeats vertex " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

}  // namespace

Coloring first_fit(const Graph& g, const std::vector<int>& ordering) {
  const int n = g.vertex_count();
  check_permutation(n, ordering);
  Coloring c;
  c.colors.assign(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(n) + 2, 0);
  for (int v : ordering) {
    for (int u : g.neighbors(v)) used[static_cast<std::size_t>(c.colors[static_cast<std::size_t>(u)])] = 1;
    int color = 1;
    while (used[static_cast<std::size_t>(color)]) ++color;
    c.colors[static_cast<std::size_t>(v)] = color;
    c.num_colors = std::max(c.num_colors, color);
    for (int u : g.neighbors(v)) used[static_cast<std::size_t>(c.colors[static_cast<std::size_t>(u)])] = 0;
  }
  return c;
}

bool is_grundy_coloring(const Graph& g, const Coloring& c, std::string* reason) {
  auto fail = [reason](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  const int n = g.vertex_count();
  if (static_cast<int>(c.colors.size()) != n)
    return fail("coloring has " + std::to_string(c.colors.size()) + " entries, expected " + std::to_string(n));
  int maxc = 0;
  for (int v = 0; v < n; ++v) {
    int cv = c.colors[static_cast<std::size_t>(v)];
    if (cv < 1) return fail("vertex " + std::to_string(v) + " has color " + std::to_string(cv) + " < 1");
    maxc = std::max(maxc, cv);
  }
  if (maxc != c.num_colors)
    return fail("num_colors is " + std::to_string(c.num_colors) + " but the largest assigned color is " +
                std::to_string(maxc));
  std::vector<char> seen(static_cast<std::size_t>(maxc) + 1, 0);
  for (int v = 0; v < n; ++v) {
    int cv = c.colors[static_cast<std::size_t>(v)];
    for (int u : g.neighbors(v)) {
      int cu = c.colors[static_cast<std::size_t>(u)];
      if (cu == cv)
        return fail("adjacent vertices " + std::to_string(v) + " and " + std::to_string(u) +
                    " share color " + std::to_string(cv));
      seen[static_cast<std::size_t>(cu)] = 1;
    }
    for (int j = 1; j < cv; ++j)
      if (!seen[static_cast<std::size_t>(j)])
        return fail("vertex " + std::to_string(v) + " of color " + std::to_string(cv) +
                    " has no neighbor of color " + std::to_string(j));
    for (int u : g.neighbors(v)) seen[static_cast<std::size_t>(c.colors[static_cast<std::size_t>(u)])] = 0;
  }
  return true;
}

GrundyResult grundy_number_bruteforce(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n)
    throw std::invalid_argument("grundy_number_bruteforce: n = " + std::to_string(n) +
                                " exceeds limit " + std::to_string(max_n));
  GrundyResult best;
  if (n == 0) {
    best.ordering = std::vector<int>{};
    return best;
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    Coloring c = first_fit(g, order);
    if (c.num_colors > best.k) {
      best.k = c.num_colors;
      best.coloring = std::move(c);
      best.ordering = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  best.exact = true;
  best.upper_bound = best.k;
  return best;
}

Graph tree_atom(int k) {
  if (k < 1) throw std::invalid_argument("tree_atom: k must be positive");
  if (k > 21) throw std::invalid_argument("tree_atom: 2^(k-1) vertices would exceed the size guard");
  int n = 1;
  std::vector<std::pair<int, int>> edges;
  for (int step = 2; step <= k; ++step) {
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
    n *= 2;
  }
  return Graph(n, edges);
}

}  // namespace grundylab
