#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bound_formulas.hpp"
#include "grundylab/bits.hpp"
#include "grundylab/coloring.hpp"
#include "grundylab/graph.hpp"
#include "grundylab/prng.hpp"

namespace grundylab {

namespace {

using Clock = std::chrono::steady_clock;

// Decides Gamma(g) >= k by searching for disjoint independent classes
// C_k, ..., C_1 where C_k is a single vertex and each C_j dominates every
// vertex placed in the classes above it. Such a structure certifies the
// bound: first-fit over (C_1, C_2, ..., C_k, rest by id) gives every member
// of C_j exactly color j. Conversely any Grundy coloring with >= k colors
// restricts to one, so the search is a decision procedure.
//
// Classes are built top down and only minimal dominating classes are
// enumerated (branch on an uncovered vertex, one candidate dominator per
// branch, tried candidates excluded from later siblings). In a minimal
// structure every member of C_j has a private neighbor above plus one
// neighbor in each class below, so members need degree >= j and the top
// vertex degree >= k-1.
struct WitnessSearch {
  const Graph& g;
  int n;
  std::vector<DynBits> adj;
  std::vector<DynBits> lowdeg;  // lowdeg[j]: vertices with degree < j
  std::vector<int> apex_order;  // by descending degree, then id
  DynBits used;
  std::vector<std::vector<int>> classes;  // classes[j] for j in 1..k
  int k = 0;
  std::optional<Clock::time_point> deadline;
  std::uint64_t ticks = 0;
  bool out_of_time = false;

  // One scratch row per recursion level. A call writes only its own row and
  // passes references one level down, so rows never alias across the stack.
  struct Frame {
    DynBits unc, sib, blk;
    std::vector<std::pair<int, int>> cands;
  };
  std::vector<Frame> pool;

  explicit WitnessSearch(const Graph& graph)
      : g(graph), n(graph.vertex_count()), used(n) {
    adj.assign(n, DynBits(n));
    for (int v = 0; v < n; ++v)
      for (int w : g.neighbors(v)) adj[v].set(w);
    lowdeg.assign(n + 1, DynBits(n));
    for (int j = 0; j <= n; ++j)
      for (int v = 0; v < n; ++v)
        if (g.degree(v) < j) lowdeg[j].set(v);
    apex_order.resize(n);
    std::iota(apex_order.begin(), apex_order.end(), 0);
    std::sort(apex_order.begin(), apex_order.end(), [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
    pool.assign(2 * n + 4, Frame{DynBits(n), DynBits(n), DynBits(n), {}});
  }

  bool time_up() {
    if (out_of_time) return true;
    if (!deadline) return false;
    if ((++ticks & 1023) != 0) return false;
    if (Clock::now() >= *deadline) out_of_time = true;
    return out_of_time;
  }

  bool decide(int target) {
    k = target;
    if (k <= 1) return n > 0;
    for (int v : apex_order) {
      if (g.degree(v) < k - 1) break;  // sorted by degree, none left
      used.clear();
      used.set(v);
      classes.assign(k + 1, {});
      classes[k].push_back(v);
      Frame& f = pool[0];
      f.unc = used;
      f.blk = used;
      f.blk |= lowdeg[k - 1];
      if (extend(k - 1, f.unc, f.blk, 1)) return true;
      if (out_of_time) return false;
    }
    return false;
  }

  // Grow class j until it dominates `unc`; `blk` holds vertices barred from
  // joining it (already used, adjacent to a chosen member, too low degree, or
  // excluded by an earlier sibling branch).
  bool extend(int j, const DynBits& unc, const DynBits& blk, int d) {
    if (time_up()) return false;
    if (unc.none()) {
      if (j == 1) return true;
      Frame& f = pool[d];
      f.unc = used;  // the finished classes are what C_{j-1} must dominate
      f.blk = used;
      f.blk |= lowdeg[j - 1];
      return extend(j - 1, f.unc, f.blk, d + 1);
    }
    // Branch on the uncovered vertex with the fewest eligible dominators.
    int u = -1, fewest = std::numeric_limits<int>::max();
    unc.for_each([&](int x) {
      int c = adj[x].count_and_not(blk);
      if (c < fewest) {
        fewest = c;
        u = x;
      }
    });
    if (fewest == 0) return false;
    Frame& f = pool[d];
    f.cands.clear();
    adj[u].for_each([&](int w) {
      if (!blk.test(w)) f.cands.emplace_back(-unc.count_and(adj[w]), w);
    });
    std::sort(f.cands.begin(), f.cands.end());
    f.sib = blk;
    for (auto [negcover, w] : f.cands) {
      (void)negcover;
      f.unc = unc;
      f.unc.and_not(adj[w]);
      f.blk = f.sib;
      f.blk |= adj[w];
      f.blk.set(w);
      used.set(w);
      classes[j].push_back(w);
      if (extend(j, f.unc, f.blk, d + 1)) return true;
      used.reset(w);
      classes[j].pop_back();
      if (out_of_time) return false;
      f.sib.set(w);
    }
    return false;
  }
};

// Exact engine for small n. A first-fit coloring partitions V into classes
// C_1, ..., C_k where each C_j is independent and every vertex above it has a
// neighbor inside it; conversely first-fit over (C_1, ..., C_k) realizes any
// such partition with exactly k colors. So Gamma(G) = reach(V) where
//   reach(S) = 1 + max over maximal independent I of G[S] of reach(S \ I),
// computed top down with a table over vertex subsets. Work is bounded by the
// submask sum n * 3^(n-1), independent of structure, which makes this the
// engine of choice for dense graphs where the witness search degenerates.
struct SubsetTable {
  static constexpr int kMaxN = 16;

  int n;
  std::uint32_t full;
  std::vector<std::uint32_t> adjm;
  std::vector<std::int8_t> memo;     // reach per subset, -1 unknown
  std::vector<std::uint32_t> chosen;  // the bottom class achieving it
  std::optional<Clock::time_point> deadline;
  std::uint64_t ticks = 0;
  bool out_of_time = false;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> pool;  // per depth

  explicit SubsetTable(const Graph& g)
      : n(g.vertex_count()), full((1u << n) - 1) {
    adjm.assign(n, 0);
    for (int v = 0; v < n; ++v)
      for (int w : g.neighbors(v)) adjm[v] |= 1u << w;
    memo.assign(std::size_t{1} << n, -1);
    chosen.assign(std::size_t{1} << n, 0);
    pool.resize(static_cast<std::size_t>(n) + 1);
  }

  bool time_up() {
    if (out_of_time) return true;
    if (!deadline) return false;
    if ((++ticks & 255) != 0) return false;
    if (Clock::now() >= *deadline) out_of_time = true;
    return out_of_time;
  }

  int solve(std::uint32_t s, int depth) {
    if (s == 0) return 0;
    if (memo[s] >= 0) return memo[s];
    if (time_up()) return 0;
    auto& cands = pool[static_cast<std::size_t>(depth)];
    cands.clear();
    for (std::uint32_t sub = s; sub; sub = (sub - 1) & s) {
      std::uint32_t cover = 0;
      bool independent = true;
      for (std::uint32_t m = sub; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (adjm[v] & sub) {
          independent = false;
          break;
        }
        cover |= adjm[v];
      }
      if (independent && (s & ~sub & ~cover) == 0)
        cands.emplace_back(std::popcount(sub), sub);
    }
    // Small bottom classes leave large residues and tend to reach highest;
    // trying them first lets the |residue| cutoff retire the rest.
    std::sort(cands.begin(), cands.end());
    const int size_s = std::popcount(s);
    int best = 0;
    std::uint32_t best_sub = 0;
    for (const auto& [pc, sub] : cands) {
      if (1 + (size_s - pc) <= best) break;  // sorted, bound only shrinks
      const int r = 1 + solve(s & ~sub, depth + 1);
      if (out_of_time) return 0;
      if (r > best) {
        best = r;
        best_sub = sub;
      }
    }
    memo[s] = static_cast<std::int8_t>(best);
    chosen[s] = best_sub;
    return best;
  }

  // Gamma plus the realizing classes, or nothing when the deadline expired.
  std::optional<int> run(std::vector<std::vector<int>>& classes) {
    const int k = solve(full, 0);
    if (out_of_time) return std::nullopt;
    classes.assign(static_cast<std::size_t>(k) + 1, {});
    std::uint32_t s = full;
    for (int j = 1; j <= k; ++j) {
      const std::uint32_t c = chosen[s];
      if (c == 0) throw std::logic_error("grundy_number_exact: partition reconstruction desynced");
      for (std::uint32_t m = c; m; m &= m - 1) classes[static_cast<std::size_t>(j)].push_back(std::countr_zero(m));
      s &= ~c;
    }
    if (s != 0) throw std::logic_error("grundy_number_exact: partition reconstruction desynced");
    return k;
  }
};

// First-fit over (C_1, ..., C_k, remaining vertices by id) recolors every
// structure vertex with its class index, so the result uses >= k colors.
std::vector<int> completion_ordering(int n, int k,
                                     const std::vector<std::vector<int>>& classes) {
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> placed(n, 0);
  for (int j = 1; j <= k; ++j)
    for (int w : classes[j]) {
      order.push_back(w);
      placed[w] = 1;
    }
  for (int v = 0; v < n; ++v)
    if (!placed[v]) order.push_back(v);
  return order;
}

}  // namespace

GrundyResult grundy_number_exact(const Graph& g, const GrundyOptions& options) {
  const int n = g.vertex_count();
  GrundyResult result;
  if (n == 0) {
    result.ordering = std::vector<int>{};
    return result;
  }
  if (options.known_gamma && (*options.known_gamma < 1 || *options.known_gamma > n))
    throw std::invalid_argument("grundy_number_exact: known_gamma out of range");

  std::optional<Clock::time_point> deadline;
  if (options.budget_ms > 0)
    deadline = Clock::now() + std::chrono::milliseconds(options.budget_ms);

  // Lower bound: best first-fit value over a few orderings.
  std::vector<int> best_order(n);
  std::iota(best_order.begin(), best_order.end(), 0);
  Coloring best = first_fit(g, best_order);
  auto consider = [&](std::vector<int> ord) {
    Coloring c = first_fit(g, ord);
    if (c.num_colors > best.num_colors) {
      best = std::move(c);
      best_order = std::move(ord);
    }
  };
  {
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
    consider(std::move(ord));
  }
  {
    SplitMix64 rng(0x5EEDBA5E);  // fixed seed, results must not vary run to run
    std::vector<int> ord(n);
    for (int round = 0; round < 8; ++round) {
      std::iota(ord.begin(), ord.end(), 0);
      for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(ord[i], ord[j]);
      }
      consider(ord);
    }
  }
  int lb = best.num_colors;

  // Upper bound: the cheapest applicable closed forms.
  int ub = n;
  ub = std::min(ub, formulas::floor_bound(formulas::delta_plus_one(g.max_degree())));
  const Girth gi = g.girth();
  if (gi.is_finite() && gi.is_odd())
    ub = std::min(ub, formulas::floor_bound(formulas::zaker_odd_girth(n, gi.value())));
  if (options.known_gamma) {
    const int gamma = *options.known_gamma;
    ub = std::min(ub, formulas::floor_bound(formulas::n_minus_gamma_plus_one(n, gamma)));
    if (g.is_triangle_free())
      ub = std::min(ub, formulas::floor_bound(formulas::triangle_free_half(n, gamma)));
    if (gi.is_finite() && gi.is_odd()) {
      ub = std::min(ub, formulas::floor_bound(formulas::odd_girth_gamma(n, gamma, gi.value())));
      if (n > gamma && g.max_degree() <= (gi.value() - 1) / 2)
        ub = std::min(ub, formulas::floor_bound(formulas::log_low_degree(n, gamma)));
    }
    if (gi.is_finite() && gi.is_even())
      ub = std::min(ub, formulas::floor_bound(formulas::even_girth_gamma(n, gamma, gi.value())));
  }
  if (ub < lb)
    throw std::logic_error("grundy_number_exact: upper bound fell below a realized coloring");

  if (lb < ub && n <= SubsetTable::kMaxN) {
    SubsetTable table(g);
    table.deadline = deadline;
    std::vector<std::vector<int>> classes;
    const std::optional<int> k = table.run(classes);
    if (!k) {
      result.k = lb;
      result.coloring = std::move(best);
      result.ordering = std::move(best_order);
      result.exact = false;
      result.upper_bound = ub;
      return result;
    }
    if (*k < lb || *k > ub)
      throw std::logic_error("grundy_number_exact: subset table disagrees with certified bounds");
    if (*k > lb) {
      auto ord = completion_ordering(n, *k, classes);
      Coloring c = first_fit(g, ord);
      if (c.num_colors != *k)
        throw std::logic_error("grundy_number_exact: witness completion lost colors");
      best = std::move(c);
      best_order = std::move(ord);
      lb = *k;
    }
    ub = lb;
  }
  WitnessSearch ws(g);
  ws.deadline = deadline;
  while (lb < ub) {
    const bool found = ws.decide(lb + 1);
    if (found) {
      auto ord = completion_ordering(n, lb + 1, ws.classes);
      Coloring c = first_fit(g, ord);
      if (c.num_colors <= lb)
        throw std::logic_error("grundy_number_exact: witness completion lost colors");
      lb = c.num_colors;
      best = std::move(c);
      best_order = std::move(ord);
    } else if (ws.out_of_time) {
      result.k = lb;
      result.coloring = std::move(best);
      result.ordering = std::move(best_order);
      result.exact = false;
      result.upper_bound = ub;
      return result;
    } else {
      ub = lb;
    }
  }

  result.k = lb;
  result.coloring = std::move(best);
  result.ordering = std::move(best_order);
  result.exact = true;
  result.upper_bound = lb;
  std::string reason;
  if (result.coloring.num_colors != result.k ||
      !is_grundy_coloring(g, result.coloring, &reason))
    throw std::logic_error("grundy_number_exact: produced coloring failed validation: " + reason);
  return result;
}

}  // namespace grundylab
