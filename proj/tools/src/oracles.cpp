#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace grundylab::oracles {

int grundy_all_orderings(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n) throw std::invalid_argument("grundy_all_orderings: n exceeds the factorial guard");
  if (n == 0) return 0;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> color(static_cast<std::size_t>(n));
  std::vector<int> seen(static_cast<std::size_t>(n) + 2, -1);
  int best = 0;
  int round = 0;
  do {
    std::fill(color.begin(), color.end(), 0);
    int used = 0;
    for (int v : order) {
      ++round;
      for (int w : g.neighbors(v))
        if (color[static_cast<std::size_t>(w)] != 0)
          seen[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = round;
      int c = 1;
      while (seen[static_cast<std::size_t>(c)] == round) ++c;
      color[static_cast<std::size_t>(v)] = c;
      used = std::max(used, c);
    }
    best = std::max(best, used);
    if (best == n) break;  // cannot do better than a color per vertex
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

int gamma_all_subsets(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n || n >= 32)
    throw std::invalid_argument("gamma_all_subsets: n exceeds the subset guard");
  if (n == 0) return 0;

  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::uint32_t m = 1u << v;
    for (int w : g.neighbors(v)) m |= 1u << w;
    closed[static_cast<std::size_t>(v)] = m;
  }
  const std::uint32_t full = (1u << n) - 1;
  int best = n;
  for (std::uint32_t set = 0; set <= full; ++set) {
    if (std::popcount(set) >= best) continue;
    std::uint32_t covered = 0;
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1)
      covered |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
    if (covered == full) best = std::popcount(set);
  }
  return best;
}

int star_partition_dp(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n || n >= 32)
    throw std::invalid_argument("star_partition_dp: n exceeds the mask guard");
  if (n == 0) return 0;

  std::vector<std::uint32_t> nb(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::uint32_t m = 0;
    for (int w : g.neighbors(v)) m |= 1u << w;
    nb[static_cast<std::size_t>(v)] = m;
  }
  const std::uint32_t full = (1u << n) - 1;
  const int inf = n + 1;
  std::vector<int> dp(static_cast<std::size_t>(full) + 1, inf);
  dp[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int v = std::countr_zero(mask);
    const std::uint32_t vbit = 1u << v;
    int best = inf;
    // part with apex v: v plus any subset of its neighbors inside mask
    std::uint32_t pool = nb[static_cast<std::size_t>(v)] & mask;
    for (std::uint32_t s = pool;; s = (s - 1) & pool) {
      best = std::min(best, dp[mask ^ vbit ^ s] + 1);
      if (s == 0) break;
    }
    // part with apex a != v: a, v, and any subset of a's other neighbors
    for (std::uint32_t as = pool; as != 0; as &= as - 1) {
      const int a = std::countr_zero(as);
      const std::uint32_t abit = 1u << a;
      std::uint32_t apool = nb[static_cast<std::size_t>(a)] & mask & ~vbit & ~abit;
      for (std::uint32_t s = apool;; s = (s - 1) & apool) {
        best = std::min(best, dp[mask ^ vbit ^ abit ^ s] + 1);
        if (s == 0) break;
      }
    }
    dp[mask] = best;
  }
  return dp[full];
}

}  // namespace grundylab::oracles
