#include "grundylab/domination.hpp"

#include <algorithm>
#include <stdexcept>

#include "grundylab/bits.hpp"

namespace grundylab {

bool is_dominating_set(const Graph& g, const std::vector<int>& set) {
  const int n = g.vertex_count();
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (int v : set) {
    if (v < 0 || v >= n) throw std::invalid_argument("dominating set entry " + std::to_string(v) + " out of range");
    covered[static_cast<std::size_t>(v)] = 1;
    for (int u : g.neighbors(v)) covered[static_cast<std::size_t>(u)] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (!covered[static_cast<std::size_t>(v)]) return false;
  return true;
}

namespace {

struct DominationSearch {
  const Graph& g;
  int n;
  std::vector<DynBits> closed;  // N[v]
  DynBits all;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::uint64_t nodes = 0;

  int best;
  std::vector<int> best_set;
  std::vector<int> stack;

  // pools indexed by recursion depth
  std::vector<DynBits> cov_pool, excl_pool;

  explicit DominationSearch(const Graph& graph,
                            std::optional<std::chrono::steady_clock::time_point> dl)
      : g(graph), n(graph.vertex_count()), all(n), deadline(dl) {
    closed.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      DynBits b(n);
      b.set(v);
      for (int u : g.neighbors(v)) b.set(u);
      closed.push_back(std::move(b));
      all.set(v);
    }
    cov_pool.assign(static_cast<std::size_t>(n) + 2, DynBits(n));
    excl_pool.assign(static_cast<std::size_t>(n) + 2, DynBits(n));
  }

  void check_budget() {
    if (deadline && (++nodes & 1023u) == 0 && std::chrono::steady_clock::now() > *deadline)
      throw BudgetExceeded("domination solver budget exceeded");
  }

  std::vector<int> greedy() {
    DynBits covered(n);
    std::vector<int> d;
    while (covered != all) {
      int bv = -1, bc = -1;
      for (int v = 0; v < n; ++v) {
        int c = closed[static_cast<std::size_t>(v)].count_and_not(covered);
        if (c > bc) {
          bc = c;
          bv = v;
        }
      }
      d.push_back(bv);
      covered |= closed[static_cast<std::size_t>(bv)];
    }
    return d;
  }

  void run() {
    std::vector<int> init = greedy();
    best = static_cast<int>(init.size());
    best_set = init;
    cov_pool[0].clear();
    excl_pool[0].clear();
    descend(0);
    std::sort(best_set.begin(), best_set.end());
  }

  void descend(int depth) {
    check_budget();
    const DynBits& covered = cov_pool[static_cast<std::size_t>(depth)];
    const DynBits& excluded = excl_pool[static_cast<std::size_t>(depth)];
    if (covered == all) {
      if (depth < best) {
        best = depth;
        best_set = stack;
      }
      return;
    }
    // greedy cover lower bound: any further pick covers at most maxgain new
    int uncovered = n - covered.count();
    int maxgain = 0;
    for (int v = 0; v < n; ++v)
      if (!excluded.test(v)) maxgain = std::max(maxgain, closed[static_cast<std::size_t>(v)].count_and_not(covered));
    if (maxgain == 0) return;
    int need = (uncovered + maxgain - 1) / maxgain;
    if (depth + need >= best) return;

    // pick the uncovered vertex with the fewest allowed dominators
    int pick = -1, pick_cnt = n + 1;
    for (int v = 0; v < n; ++v) {
      if (covered.test(v)) continue;
      int c = closed[static_cast<std::size_t>(v)].count_and_not(excluded);
      if (c < pick_cnt) {
        pick_cnt = c;
        pick = v;
      }
    }
    if (pick_cnt == 0) return;

    std::vector<int> cands;
    cands.reserve(static_cast<std::size_t>(pick_cnt));
    closed[static_cast<std::size_t>(pick)].for_each([&](int w) {
      if (!excluded.test(w)) cands.push_back(w);
    });
    std::stable_sort(cands.begin(), cands.end(), [&](int a, int b) {
      return closed[static_cast<std::size_t>(a)].count_and_not(covered) >
             closed[static_cast<std::size_t>(b)].count_and_not(covered);
    });

    DynBits& child_cov = cov_pool[static_cast<std::size_t>(depth) + 1];
    DynBits& child_excl = excl_pool[static_cast<std::size_t>(depth) + 1];
    for (std::size_t i = 0; i < cands.size(); ++i) {
      int w = cands[i];
      child_cov = covered;
      child_cov |= closed[static_cast<std::size_t>(w)];
      child_excl = excluded;
      for (std::size_t j = 0; j < i; ++j) child_excl.set(cands[j]);  // dedupe: earlier picks banned
      stack.push_back(w);
      descend(depth + 1);
      stack.pop_back();
    }
  }
};

}  // namespace

DominationWitness domination_number_exact(const Graph& g,
                                          std::optional<std::chrono::steady_clock::time_point> deadline) {
  if (g.vertex_count() == 0) return DominationWitness{0, {}};
  DominationSearch s(g, deadline);
  s.run();
  return DominationWitness{s.best, s.best_set};
}

DominationWitness domination_number_bruteforce(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (max_n > 30) throw std::invalid_argument("domination_number_bruteforce: limit above 30 is not supported");
  if (n > max_n)
    throw std::invalid_argument("domination_number_bruteforce: n = " + std::to_string(n) +
                                " exceeds limit " + std::to_string(max_n));
  if (n == 0) return DominationWitness{0, {}};
  std::vector<std::uint64_t> closed(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    closed[static_cast<std::size_t>(v)] = 1ull << v;
    for (int u : g.neighbors(v)) closed[static_cast<std::size_t>(v)] |= 1ull << u;
  }
  const std::uint64_t full = (n == 64) ? ~0ull : (1ull << n) - 1;
  int best = n + 1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    std::uint64_t cov = 0;
    for (std::uint64_t m = mask; m; m &= m - 1)
      cov |= closed[static_cast<std::size_t>(std::countr_zero(m))];
    if (cov == full) {
      best = size;
      best_mask = mask;
    }
  }
  DominationWitness w;
  w.gamma = best;
  for (int v = 0; v < n; ++v)
    if ((best_mask >> v) & 1) w.set.push_back(v);
  return w;
}

StarPartition star_partition_from_dominating_set(const Graph& g, const std::vector<int>& dominators) {
  const int n = g.vertex_count();
  if (n > 0 && g.min_degree() == 0)
    throw std::invalid_argument("star_partition_from_dominating_set: graph has an isolated vertex");
  std::vector<int> d = dominators;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  if (!is_dominating_set(g, d))
    throw std::invalid_argument("star_partition_from_dominating_set: set is not dominating");

  std::vector<char> in_d(static_cast<std::size_t>(n), 0);
  for (int v : d) in_d[static_cast<std::size_t>(v)] = 1;
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  StarPartition p;
  for (int u : d) {
    StarPart part;
    part.apex = u;
    part.members.push_back(u);
    taken[static_cast<std::size_t>(u)] = 1;
    for (int w : g.neighbors(u))
      if (!in_d[static_cast<std::size_t>(w)] && !taken[static_cast<std::size_t>(w)]) {
        part.members.push_back(w);
        taken[static_cast<std::size_t>(w)] = 1;
      }
    std::sort(part.members.begin(), part.members.end());
    p.parts.push_back(std::move(part));
  }
  return p;
}

bool is_star_partition(const Graph& g, const StarPartition& p, std::string* defect) {
  auto fail = [defect](const std::string& why) {
    if (defect) *defect = why;
    return false;
  };
  const int n = g.vertex_count();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const StarPart& part = p.parts[i];
    if (part.members.empty()) return fail("part " + std::to_string(i) + " is empty");
    bool apex_listed = false;
    for (int v : part.members) {
      if (v < 0 || v >= n) return fail("part " + std::to_string(i) + " lists vertex " + std::to_string(v) + " out of range");
      if (owner[static_cast<std::size_t>(v)] >= 0)
        return fail("vertex " + std::to_string(v) + " appears in parts " +
                    std::to_string(owner[static_cast<std::size_t>(v)]) + " and " + std::to_string(i));
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
      if (v == part.apex) apex_listed = true;
    }
    if (!apex_listed)
      return fail("part " + std::to_string(i) + ": apex " + std::to_string(part.apex) + " is not a member");
    for (int v : part.members)
      if (v != part.apex && !g.has_edge(part.apex, v))
        return fail("part " + std::to_string(i) + ": apex " + std::to_string(part.apex) +
                    " is not adjacent to member " + std::to_string(v));
  }
  for (int v = 0; v < n; ++v)
    if (owner[static_cast<std::size_t>(v)] < 0) return fail("vertex " + std::to_string(v) + " is in no part");
  return true;
}

namespace {

// Feasibility of a star partition with at most `target` apexes. Branches on
// how the first uncovered vertex is resolved: join an existing adjacent apex
// (any one is as good as any other, so only the smallest is tried), become
// an apex, or join a not-yet-covered neighbor that becomes an apex.
struct StarSearch {
  const Graph& g;
  int n;
  int target;
  int delta1;
  std::vector<DynBits> adj;
  std::vector<int> apex_of;  // -1 until assigned; apexes point at themselves
  std::vector<int> apexes;
  DynBits apex_mask;
  DynBits covered;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::uint64_t nodes = 0;
  bool found = false;

  StarSearch(const Graph& graph, int t,
             std::optional<std::chrono::steady_clock::time_point> dl)
      : g(graph), n(graph.vertex_count()), target(t), delta1(graph.max_degree() + 1),
        apex_of(static_cast<std::size_t>(graph.vertex_count()), -1),
        apex_mask(graph.vertex_count()), covered(graph.vertex_count()), deadline(dl) {
    adj.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      DynBits row(n);
      for (int w : g.neighbors(v)) row.set(w);
      adj.push_back(std::move(row));
    }
  }

  bool solve() {
    descend();
    return found;
  }

  int first_uncovered() const {
    for (int v = 0; v < n; ++v)
      if (!covered.test(v)) return v;
    return -1;
  }

  // On success the assignment is left in place for partition().
  void descend() {
    if (deadline && (++nodes & 1023u) == 0 && std::chrono::steady_clock::now() > *deadline)
      throw BudgetExceeded("star partition solver budget exceeded");
    int u = first_uncovered();
    if (u < 0) {
      found = true;
      return;
    }
    // Uncovered vertices next to an existing apex can be absorbed for free;
    // only the rest force new stars, at most delta+1 vertices each.
    int need = 0;
    for (int v = 0; v < n; ++v)
      if (!covered.test(v) && !adj[static_cast<std::size_t>(v)].intersects(apex_mask)) ++need;
    int lb = (need + delta1 - 1) / delta1;
    if (static_cast<int>(apexes.size()) + lb > target) return;

    // smallest existing adjacent apex
    for (int w : g.neighbors(u))
      if (apex_of[static_cast<std::size_t>(w)] == w) {
        assign(u, w);
        descend();
        if (found) return;
        unassign(u);
        break;
      }
    if (static_cast<int>(apexes.size()) < target) {
      make_apex(u);
      descend();
      if (found) return;
      unmake_apex(u);
      for (int w : g.neighbors(u)) {
        if (covered.test(w)) continue;
        make_apex(w);
        assign(u, w);
        descend();
        if (found) return;
        unassign(u);
        unmake_apex(w);
      }
    }
  }

  void assign(int v, int apex) {
    apex_of[static_cast<std::size_t>(v)] = apex;
    covered.set(v);
  }
  void unassign(int v) {
    apex_of[static_cast<std::size_t>(v)] = -1;
    covered.reset(v);
  }
  void make_apex(int v) {
    apex_of[static_cast<std::size_t>(v)] = v;
    covered.set(v);
    apex_mask.set(v);
    apexes.push_back(v);
  }
  void unmake_apex(int v) {
    apex_of[static_cast<std::size_t>(v)] = -1;
    covered.reset(v);
    apex_mask.reset(v);
    apexes.pop_back();
  }

  StarPartition partition() const {
    StarPartition p;
    std::vector<int> sorted_apexes = apexes;
    std::sort(sorted_apexes.begin(), sorted_apexes.end());
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < sorted_apexes.size(); ++i) {
      StarPart part;
      part.apex = sorted_apexes[i];
      index[static_cast<std::size_t>(sorted_apexes[i])] = static_cast<int>(i);
      p.parts.push_back(std::move(part));
    }
    for (int v = 0; v < n; ++v)
      p.parts[static_cast<std::size_t>(index[static_cast<std::size_t>(apex_of[static_cast<std::size_t>(v)])])]
          .members.push_back(v);
    return p;
  }
};

}  // namespace

StarPartitionResult star_partition_number_exact(
    const Graph& g, std::optional<std::chrono::steady_clock::time_point> deadline) {
  const int n = g.vertex_count();
  if (n == 0) return StarPartitionResult{0, {}};
  const int gamma = domination_number_exact(g, deadline).gamma;
  for (int t = gamma;; ++t) {
    StarSearch s(g, t, deadline);
    if (s.solve()) {
      if (g.min_degree() >= 1 && t != gamma)
        throw std::logic_error("star partition solver disagrees with gamma on a graph without isolated vertices");
      return StarPartitionResult{t, s.partition()};
    }
    if (t > n) throw std::logic_error("star partition search failed to terminate");
  }
}

}  // namespace grundylab
