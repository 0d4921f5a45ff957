#include "grundylab/generators.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "grundylab/prng.hpp"

namespace grundylab {

namespace {

std::vector<int> extremal_colors(int t) {
  std::vector<int> c(2 * t, 0);
  c[0] = t + 1;
  for (int i = 2; i <= t; ++i) c[i - 1] = t - i + 1;
  for (int j = 1; j <= t; ++j) c[t + j - 1] = t - j + 1;
  return c;
}

}  // namespace

LabeledGraph extremal_even(int t) {
  if (t < 2) throw std::invalid_argument("extremal_even: t must be at least 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j) {
      if (i == j && i >= 2) continue;
      edges.emplace_back(i - 1, t + j - 1);
    }
  return {Graph(2 * t, edges), Coloring{extremal_colors(t), t + 1}};
}

LabeledGraph extremal_odd(int t) {
  if (t < 3) throw std::invalid_argument("extremal_odd: t must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j) {
      if (i == j && i >= 2) continue;
      if (i == t && j == t - 1) continue;  // swapped out for the pendant below
      edges.emplace_back(i - 1, t + j - 1);
    }
  edges.emplace_back(2 * t, t + (t - 1) - 1);
  std::vector<int> colors = extremal_colors(t);
  colors.push_back(1);
  return {Graph(2 * t + 1, edges), Coloring{std::move(colors), t + 1}};
}

Graph prop_gamma_equality(int q, int d) {
  if (q < 1 || d < 1 || d > q)
    throw std::invalid_argument("prop_gamma_equality: need 1 <= d <= q");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) edges.emplace_back(i, j);
  for (int i = 0; i < d; ++i) edges.emplace_back(i, q + i);
  for (int i = d; i < q; ++i) edges.emplace_back(i, q);
  return Graph(q + d, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path(int n) {
  if (n < 0) throw std::invalid_argument("path: n must be nonnegative");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete(int n) {
  if (n < 0) throw std::invalid_argument("complete: n must be nonnegative");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0)
    throw std::invalid_argument("complete_bipartite: parts must be nonnegative");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, edges);
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_graph: n must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("random_graph: p must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::optional<Graph> random_with_min_girth(int n, double p, int gmin, std::uint64_t seed,
                                           int max_attempts) {
  if (gmin < 3) throw std::invalid_argument("random_with_min_girth: gmin must be at least 3");
  if (max_attempts < 1)
    throw std::invalid_argument("random_with_min_girth: max_attempts must be positive");
  for (int a = 0; a < max_attempts; ++a) {
    Graph g = random_graph(n, p, seed + static_cast<std::uint64_t>(a));
    const Girth gi = g.girth();
    if (!gi.is_finite() || gi.value() >= gmin) return g;
  }
  return std::nullopt;
}

}  // namespace grundylab
