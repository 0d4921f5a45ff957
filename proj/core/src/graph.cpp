#include "grundylab/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace grundylab {

Girth Girth::finite(int length) {
  if (length < 3) throw std::invalid_argument("girth must be at least 3, got " + std::to_string(length));
  Girth g;
  g.v_ = length;
  return g;
}

int Girth::value() const {
  if (!v_) throw std::logic_error("girth is infinite");
  return *v_;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  adj_.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge " + std::to_string(i) + " endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v)
      throw std::invalid_argument("edge " + std::to_string(i) + " is a self loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    m_ += static_cast<int>(nb.size());
  }
  m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_triangle_free() const {
  for (int u = 0; u < n_; ++u) {
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    for (int v : nu) {
      if (v < u) continue;
      const auto& nv = adj_[static_cast<std::size_t>(v)];
      // sorted lists: two-pointer intersection
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] == nv[j]) return false;
        if (nu[i] < nv[j])
          ++i;
        else
          ++j;
      }
    }
  }
  return true;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++cnt;
        q.push(v);
      }
  }
  return cnt == n_;
}

Girth Graph::girth() const {
  // BFS from every root; a non-tree edge (u,v) seen from u closes a walk of
  // length dist[u]+dist[v]+1 through the root, which always contains a cycle
  // of at most that length, and for a root on a shortest cycle the closing
  // edge across from it reports the girth exactly.
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n_));
  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::vector<int> queue(static_cast<std::size_t>(n_));
  for (int root = 0; root < n_; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int u = queue[head++];
      if (2 * dist[static_cast<std::size_t>(u)] >= best) break;  // no shorter closing walk possible
      for (int v : adj_[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue[tail++] = v;
        } else if (v != parent[static_cast<std::size_t>(u)]) {
          best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1);
        }
      }
    }
    if (best == 3) break;
  }
  if (best == std::numeric_limits<int>::max()) return Girth::infinite();
  return Girth::finite(best);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> ids = vertices;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("induced_subgraph: duplicate vertex in selection");
  for (int v : ids)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) + " out of range");

  std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) remap[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edges;
  for (int u : ids)
    for (int v : g.neighbors(u))
      if (u < v && remap[static_cast<std::size_t>(v)] >= 0)
        edges.emplace_back(remap[static_cast<std::size_t>(u)], remap[static_cast<std::size_t>(v)]);
  return InducedSubgraph{Graph(static_cast<int>(ids.size()), edges), std::move(ids)};
}

}  // namespace grundylab
