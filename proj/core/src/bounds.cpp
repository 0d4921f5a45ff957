#include "grundylab/bounds.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "bound_formulas.hpp"
#include "grundylab/coloring.hpp"
#include "grundylab/domination.hpp"

namespace grundylab {

namespace {

constexpr double kSatTol = 1e-9;   // |grundy - rhs| within this counts as equal
constexpr double kNearTie = 1e-6;  // below this slack the exact comparison decides

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void validate_gamma(const Graph& g, int gamma, const char* who) {
  const int n = g.vertex_count();
  if (gamma < 0 || gamma > n || (n > 0 && gamma == 0))
    throw std::invalid_argument(std::string(who) + ": gamma out of range");
}

std::optional<int> cmp3(std::int64_t a, std::int64_t b) {
  return a < b ? -1 : a == b ? 0 : 1;
}

bool ipow128(std::int64_t base, int e, unsigned __int128& out) {
  const unsigned __int128 cap = ~static_cast<unsigned __int128>(0);
  unsigned __int128 r = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && r > cap / static_cast<unsigned __int128>(base)) return false;
    r *= static_cast<unsigned __int128>(base);
  }
  out = r;
  return true;
}

// lf * lb^e versus rf * rb^e in 128-bit integers; nullopt on overflow, in
// which case the caller keeps the floating-point verdict (overflow only
// happens far from a tie at these magnitudes).
std::optional<int> cmp_scaled_powers(std::int64_t lf, std::int64_t lb, int e,
                                     std::int64_t rf, std::int64_t rb) {
  unsigned __int128 lp = 0, rp = 0;
  if (!ipow128(lb, e, lp) || !ipow128(rb, e, rp)) return std::nullopt;
  const unsigned __int128 cap = ~static_cast<unsigned __int128>(0);
  if (lp != 0 && static_cast<unsigned __int128>(lf) > cap / lp) return std::nullopt;
  if (rp != 0 && static_cast<unsigned __int128>(rf) > cap / rp) return std::nullopt;
  const unsigned __int128 lhs = lp * static_cast<unsigned __int128>(lf);
  const unsigned __int128 rhs = rp * static_cast<unsigned __int128>(rf);
  if (lhs < rhs) return -1;
  if (lhs == rhs) return 0;
  return 1;
}

}  // namespace

double bound_delta(const Graph& g) { return formulas::delta_plus_one(g.max_degree()); }

double bound_n_minus_gamma(const Graph& g, int gamma) {
  validate_gamma(g, gamma, "bound_n_minus_gamma");
  return formulas::n_minus_gamma_plus_one(g.vertex_count(), gamma);
}

std::optional<double> bound_triangle_free(const Graph& g, int gamma) {
  validate_gamma(g, gamma, "bound_triangle_free");
  if (!g.is_triangle_free()) return std::nullopt;
  return formulas::triangle_free_half(g.vertex_count(), gamma);
}

std::optional<double> bound_zaker(const Graph& g) {
  const Girth gi = g.girth();
  if (!gi.is_finite() || !gi.is_odd()) return std::nullopt;
  return formulas::zaker_odd_girth(g.vertex_count(), gi.value());
}

std::optional<double> bound_odd_girth(const Graph& g, int gamma) {
  validate_gamma(g, gamma, "bound_odd_girth");
  const Girth gi = g.girth();
  if (!gi.is_finite() || !gi.is_odd()) return std::nullopt;
  return formulas::odd_girth_gamma(g.vertex_count(), gamma, gi.value());
}

std::optional<double> bound_log(const Graph& g, int gamma) {
  validate_gamma(g, gamma, "bound_log");
  const Girth gi = g.girth();
  if (!gi.is_finite() || !gi.is_odd()) return std::nullopt;
  if (g.max_degree() > (gi.value() - 1) / 2) return std::nullopt;
  if (g.vertex_count() == gamma) return std::nullopt;
  return formulas::log_low_degree(g.vertex_count(), gamma);
}

std::optional<double> bound_even_girth(const Graph& g, int gamma) {
  validate_gamma(g, gamma, "bound_even_girth");
  const Girth gi = g.girth();
  if (!gi.is_finite() || !gi.is_even()) return std::nullopt;
  return formulas::even_girth_gamma(g.vertex_count(), gamma, gi.value());
}

bool equality_characterization_holds(const Graph& g, int gamma, int grundy, int max_n) {
  if (max_n > 30)
    throw std::invalid_argument("equality_characterization_holds: max_n above 30 is not supported");
  const int n = g.vertex_count();
  if (n > max_n)
    throw std::invalid_argument("equality_characterization_holds: graph exceeds max_n");
  validate_gamma(g, gamma, "equality_characterization_holds");
  if (grundy - 1 + gamma != n) return false;  // |Q| + |D| must already add up

  std::vector<std::uint32_t> adjm(n, 0), closed(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) adjm[v] |= 1u << w;
    closed[v] = adjm[v] | (1u << v);
  }
  const std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;

  // D independent dominating of size gamma; the rest must pair up completely
  auto rec = [&](auto&& self, int start, int left, std::uint32_t dset,
                 std::uint32_t dom) -> bool {
    if (left == 0) {
      if (dom != full) return false;
      const std::uint32_t q = full & ~dset;
      for (std::uint32_t rest = q; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if ((q & ~closed[v]) != 0) return false;
      }
      return true;
    }
    for (int v = start; v + left <= n; ++v) {
      if (adjm[v] & dset) continue;
      if (self(self, v + 1, left - 1, dset | (1u << v), dom | closed[v])) return true;
    }
    return false;
  };
  return rec(rec, 0, gamma, 0u, 0u);
}

BoundReport check_all(const Graph& g, const CheckOptions& opt) {
  BoundReport r;
  r.graph_id = opt.graph_id;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.girth = g.girth();
  r.delta = g.max_degree();
  r.triangle_free = g.is_triangle_free();

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (opt.budget_ms > 0)
    deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(opt.budget_ms);
  r.gamma = domination_number_exact(g, deadline).gamma;

  GrundyOptions gopt;
  gopt.budget_ms = opt.budget_ms;
  gopt.known_gamma = r.gamma;
  const GrundyResult gres = grundy_number_exact(g, gopt);
  r.grundy = gres.k;
  r.exact = gres.exact;
  r.grundy_upper = gres.upper_bound;

  // Applies the verdict policy to an entry whose rhs is set.
  auto finish = [&](BoundEntry e, std::optional<int> cmp) {
    const double rhs = *e.rhs;
    e.slack = rhs - r.grundy;
    if (!r.exact) {
      e.applicability = Applicability::unknown_bracketed;
      e.reason = "grundy is bracketed, verdict open";
      if (rhs < r.grundy - kSatTol) {
        e.satisfied = false;
        r.anomalies.push_back(e.name + " violated: certified lower bound " +
                              std::to_string(r.grundy) + " > rhs " + fmt6(rhs));
      }
      r.entries.push_back(std::move(e));
      return;
    }
    e.applicability = Applicability::applicable;
    const double diff = rhs - r.grundy;
    bool sat, eq;
    if (std::fabs(diff) < kNearTie && cmp.has_value()) {
      sat = *cmp <= 0;
      eq = *cmp == 0;
    } else {
      sat = diff >= -kSatTol;
      eq = std::fabs(diff) <= kSatTol;
    }
    e.satisfied = sat;
    e.equality = eq;
    if (!sat)
      r.anomalies.push_back(e.name + " violated: grundy " + std::to_string(r.grundy) +
                            " > rhs " + fmt6(rhs));
    r.entries.push_back(std::move(e));
  };
  auto skip = [&](const char* name, std::string reason) {
    BoundEntry e;
    e.name = name;
    e.applicability = Applicability::inapplicable;
    e.reason = std::move(reason);
    r.entries.push_back(std::move(e));
  };
  auto no_odd_girth = [&]() -> std::string {
    return r.girth.is_finite() ? "girth is even" : "acyclic graph, girth undefined";
  };

  const std::int64_t gr64 = r.grundy;
  const std::int64_t base = r.n - r.gamma;

  {
    BoundEntry e;
    e.name = "delta_plus_one";
    e.rhs = bound_delta(g);
    finish(std::move(e), cmp3(gr64, r.delta + 1));
  }
  {
    BoundEntry e;
    e.name = "n_minus_gamma_plus_one";
    e.rhs = bound_n_minus_gamma(g, r.gamma);
    finish(std::move(e), cmp3(gr64, base + 1));
  }
  if (auto rhs = bound_triangle_free(g, r.gamma)) {
    BoundEntry e;
    e.name = "triangle_free_half";
    e.rhs = *rhs;
    finish(std::move(e), cmp3(2 * gr64, base + 4));
  } else {
    skip("triangle_free_half", "graph contains a triangle");
  }
  if (auto rhs = bound_zaker(g)) {
    const int gv = r.girth.value(), e2 = (gv - 1) / 2;
    BoundEntry e;
    e.name = "zaker_odd_girth";
    e.rhs = *rhs;
    finish(std::move(e), cmp_scaled_powers(1, 2 * gr64, e2, r.n, gv - 1));
  } else {
    skip("zaker_odd_girth", no_odd_girth());
  }
  if (auto rhs = bound_odd_girth(g, r.gamma)) {
    const int gv = r.girth.value(), e2 = (gv - 1) / 2;
    BoundEntry e;
    e.name = "odd_girth_gamma";
    e.rhs = *rhs;
    std::optional<int> cmp;
    if (base == 0)
      cmp = cmp3(gr64, 1);
    else if (gr64 <= 1)
      cmp = -1;  // rhs exceeds 1 whenever n > gamma
    else
      cmp = cmp_scaled_powers(1, 2 * (gr64 - 1), e2, base, gv - 1);
    finish(std::move(e), cmp);
  } else {
    skip("odd_girth_gamma", no_odd_girth());
  }
  if (auto rhs = bound_log(g, r.gamma)) {
    BoundEntry e;
    e.name = "log_low_degree";
    e.rhs = *rhs;
    std::optional<int> cmp;
    if (gr64 < 2) {
      cmp = -1;  // rhs is at least 2
    } else {
      unsigned __int128 p = 0;
      if (ipow128(2, r.grundy - 2, p)) {
        const auto b128 = static_cast<unsigned __int128>(base);
        cmp = p < b128 ? -1 : p == b128 ? 0 : 1;
      }
    }
    finish(std::move(e), cmp);
  } else {
    std::string reason;
    if (!r.girth.is_finite() || !r.girth.is_odd())
      reason = no_odd_girth();
    else if (g.max_degree() > (r.girth.value() - 1) / 2)
      reason = "max degree above (g-1)/2";
    else
      reason = "n equals gamma, log of zero";
    skip("log_low_degree", std::move(reason));
  }
  if (auto rhs = bound_even_girth(g, r.gamma)) {
    const int gv = r.girth.value(), e2 = (gv - 2) / 2;
    BoundEntry e;
    e.name = "even_girth_gamma";
    e.rhs = *rhs;
    std::optional<int> cmp;
    if (gr64 <= 2)
      cmp = base == 0 ? cmp3(gr64, 2) : -1;
    else
      cmp = cmp_scaled_powers(2, 2 * (gr64 - 2), e2, base, gv - 2);
    finish(std::move(e), cmp);
  } else {
    skip("even_girth_gamma",
         r.girth.is_finite() ? "girth is odd" : "acyclic graph, girth undefined");
  }

  r.twhz_rhs = formulas::twhz_half(r.n);
  r.beats_delta_condition = static_cast<std::int64_t>(r.n) - 2 * r.delta + 2 <= r.gamma;
  if (r.girth.is_finite() && r.girth.is_odd()) {
    const double z = *bound_zaker(g);
    const double o = *bound_odd_girth(g, r.gamma);
    r.odd_improves_zaker = o < z + 1.0;
    r.odd_full_strict = o < z;
    if (r.gamma >= 2)
      r.odd_base_strict = formulas::zaker_odd_girth(r.n - r.gamma, r.girth.value()) <
                          formulas::zaker_odd_girth(r.n, r.girth.value());
  }

  const int ec_limit = std::min(opt.equality_search_max_n, 30);
  if (r.exact && r.n <= ec_limit) {
    const bool ec = equality_characterization_holds(g, r.gamma, r.grundy, ec_limit);
    r.equality_characterization = ec;
    if (ec != (r.grundy == r.n - r.gamma + 1))
      r.anomalies.push_back(
          "equality characterization disagrees with grundy == n - gamma + 1");
  }

  return r;
}

}  // namespace grundylab
