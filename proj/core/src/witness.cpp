#include "grundylab/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace grundylab {

namespace {

std::int64_t binom(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 c = 1;
  for (std::int64_t i = 1; i <= r; ++i) c = c * static_cast<unsigned __int128>(n - r + i) / static_cast<unsigned __int128>(i);
  return static_cast<std::int64_t>(c);
}

}  // namespace

LeveledWitness witness_tree(int k, int depth, bool doubled) {
  if (k < 2) throw std::invalid_argument("witness_tree: k must be at least 2");
  if (doubled && k < 3) throw std::invalid_argument("witness_tree: doubled tree needs k >= 3");
  if (k > 21) throw std::invalid_argument("witness_tree: k above 21 is not supported");
  if (depth < 1) throw std::invalid_argument("witness_tree: depth must be at least 1");
  const int height = doubled ? k - 1 : k;
  if (depth > height)
    throw std::invalid_argument("witness_tree: depth exceeds the demand tree height");

  std::vector<int> demand, level_of, parent, roots;
  std::vector<std::vector<int>> levels(depth);
  std::vector<std::pair<int, int>> edges;

  auto add_vertex = [&](int dem, int lev, int par) {
    const int id = static_cast<int>(demand.size());
    demand.push_back(dem);
    level_of.push_back(lev);
    parent.push_back(par);
    levels[lev - 1].push_back(id);
    if (par >= 0) edges.emplace_back(par, id);
    return id;
  };

  if (doubled) {
    add_vertex(k, 1, -1);
    add_vertex(k - 1, 1, -1);
    edges.emplace_back(0, 1);
    roots = {0, 1};
  } else {
    add_vertex(k, 1, -1);
    roots = {0};
  }

  for (int lev = 1; lev < depth; ++lev) {
    // (-demand, parent) pairs; ascending sort gives demand desc, parent asc
    std::vector<std::pair<int, int>> next;
    for (int x : levels[lev - 1]) {
      int top = demand[x] - 1;
      // the k-root of the doubled pair already gets color k-1 from the other root
      if (doubled && lev == 1 && x == 0) top = k - 2;
      for (int c = 1; c <= top; ++c) next.emplace_back(-c, x);
    }
    std::sort(next.begin(), next.end());
    for (auto [negc, par] : next) add_vertex(-negc, lev + 1, par);
  }

  const int n = static_cast<int>(demand.size());
  return LeveledWitness{Graph(n, edges), std::move(level_of), std::move(demand),
                        std::move(parent), std::move(roots),  std::move(levels),
                        depth,             k,                 doubled};
}

StarPartition witness_star_partition(const LeveledWitness& w, int g) {
  if (g < 5) throw std::invalid_argument("witness_star_partition: g must be at least 5");
  const bool even = g % 2 == 0;
  if (even != w.doubled)
    throw std::invalid_argument(
        "witness_star_partition: even g pairs with the doubled tree, odd g with the single-root tree");
  const int want = even ? g / 2 : (g + 1) / 2;
  if (w.depth != want)
    throw std::invalid_argument("witness_star_partition: tree depth does not match g");

  const int n = w.graph.vertex_count();
  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v)
    if (w.parent[v] >= 0) children[w.parent[v]].push_back(v);

  std::vector<StarPart> parts;
  auto add_star = [&](int apex, std::vector<int> members) {
    members.push_back(apex);
    std::sort(members.begin(), members.end());
    parts.push_back(StarPart{apex, std::move(members)});
  };

  const int r = g % 4;
  if (r == 3 || r == 0) {
    // every odd-level vertex is an apex over its children
    for (int lev = 1; lev < w.depth; lev += 2)
      for (int x : w.levels[lev - 1]) add_star(x, children[x]);
  } else {
    // each root absorbs its color-1 child; other even-level vertices are apexes
    std::vector<char> absorbed(n, 0);
    for (int root : w.roots) {
      int c1 = -1;
      for (int ch : children[root])
        if (w.demanded_color[ch] == 1) c1 = ch;
      if (c1 < 0) throw std::logic_error("witness_star_partition: root lacks a color-1 child");
      absorbed[c1] = 1;
      add_star(root, {c1});
    }
    for (int lev = 2; lev < w.depth; lev += 2)
      for (int x : w.levels[lev - 1])
        if (!absorbed[x]) add_star(x, children[x]);
  }

  std::sort(parts.begin(), parts.end(),
            [](const StarPart& a, const StarPart& b) { return a.apex < b.apex; });
  return StarPartition{std::move(parts)};
}

CountIdentity count_identities(int k, int g) {
  if (g < 5) throw std::invalid_argument("count_identities: g must be at least 5");
  const bool even = g % 2 == 0;
  if (!even && k < (g + 1) / 2)
    throw std::invalid_argument("count_identities: odd g needs k >= (g+1)/2");
  if (even && k < (g + 2) / 2)
    throw std::invalid_argument("count_identities: even g needs k >= (g+2)/2");
  if (k > 60) throw std::invalid_argument("count_identities: k above 60 is not supported");

  CountIdentity id;
  id.k = k;
  id.g = g;
  id.g_mod_4 = g % 4;
  if (!even) {
    for (int i = 0; i <= (g - 1) / 2; ++i) id.v_h += binom(k - 1, i);
    if (g % 4 == 3)
      for (int i = 0; i <= (g - 3) / 4; ++i) id.s_prime += binom(k - 1, 2 * i);
    else
      for (int i = 1; i <= (g - 1) / 4; ++i) id.s_prime += binom(k - 1, 2 * i - 1);
  } else {
    for (int i = 0; i <= g / 2 - 1; ++i) id.v_h += 2 * binom(k - 2, i);
    if (g % 4 == 0)
      for (int i = 0; i <= (g - 4) / 4; ++i) id.s_prime += 2 * binom(k - 2, 2 * i);
    else
      for (int i = 1; i <= (g - 2) / 4; ++i) id.s_prime += 2 * binom(k - 2, 2 * i - 1);
  }
  id.uncovered = id.v_h - id.s_prime;
  return id;
}

bool binomial_lower_bound_check(std::int64_t a, std::int64_t b) {
  if (b < 1 || b > a)
    throw std::invalid_argument("binomial_lower_bound_check: need 1 <= b <= a");

  const unsigned __int128 cap = ~static_cast<unsigned __int128>(0) >> 1;
  auto pow_fits = [&](std::int64_t base, std::int64_t e, unsigned __int128& out) {
    unsigned __int128 r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
      if (r > cap / static_cast<unsigned __int128>(base)) return false;
      r *= static_cast<unsigned __int128>(base);
    }
    out = r;
    return true;
  };
  auto binom_fits = [&](std::int64_t n, std::int64_t r, unsigned __int128& out) {
    r = std::min(r, n - r);
    unsigned __int128 c = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
      if (c > cap / static_cast<unsigned __int128>(n - r + i)) return false;
      c = c * static_cast<unsigned __int128>(n - r + i) / static_cast<unsigned __int128>(i);
    }
    out = c;
    return true;
  };

  // exact route: a^b <= C(a,b) * b^b in 128-bit arithmetic
  unsigned __int128 lhs = 0, mid = 0, scale = 0;
  if (pow_fits(a, b, lhs) && binom_fits(a, b, mid) && pow_fits(b, b, scale)) {
    if (mid != 0 && scale > (~static_cast<unsigned __int128>(0)) / mid)
      return true;  // the right side overflows 128 bits, the left side did not
    return lhs <= mid * scale;
  }

  const long double lhs_log =
      static_cast<long double>(b) *
      std::log(static_cast<long double>(a) / static_cast<long double>(b));
  const long double rhs_log = std::lgamma(static_cast<long double>(a) + 1) -
                              std::lgamma(static_cast<long double>(b) + 1) -
                              std::lgamma(static_cast<long double>(a - b) + 1);
  return lhs_log <= rhs_log + 1e-9L;
}

std::string witness_to_dot(const LeveledWitness& w) {
  std::ostringstream out;
  out << "graph witness {\n  rankdir=TB;\n  node [shape=circle];\n";
  for (const auto& level : w.levels) {
    out << "  { rank=same;";
    for (int v : level) out << " v" << v << ";";
    out << " }\n";
  }
  const int n = w.graph.vertex_count();
  for (int v = 0; v < n; ++v)
    out << "  v" << v << " [label=\"v" << v << "\\nc" << w.demanded_color[v] << "\"];\n";
  for (auto [u, v] : w.graph.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace grundylab
