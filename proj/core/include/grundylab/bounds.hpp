#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grundylab/graph.hpp"

namespace grundylab {

// Closed-form upper bounds on the Grundy number. Each returns the raw real
// right-hand side (never floored); the optional-returning ones yield nullopt
// when the bound does not apply to the graph.
double bound_delta(const Graph& g);                                  // delta + 1
double bound_n_minus_gamma(const Graph& g, int gamma);               // n - gamma + 1
std::optional<double> bound_triangle_free(const Graph& g, int gamma);  // needs no triangle
std::optional<double> bound_zaker(const Graph& g);                     // needs finite odd girth
std::optional<double> bound_odd_girth(const Graph& g, int gamma);      // needs finite odd girth
std::optional<double> bound_log(const Graph& g, int gamma);  // odd girth, delta <= (g-1)/2, n > gamma
std::optional<double> bound_even_girth(const Graph& g, int gamma);     // needs finite even girth

// Whether V(G) splits into a clique Q on grundy-1 vertices and an independent
// dominating set D of size gamma; equivalent to grundy == n - gamma + 1.
// Exhaustive partition search, guarded by max_n.
bool equality_characterization_holds(const Graph& g, int gamma, int grundy, int max_n = 24);

enum class Applicability { applicable, inapplicable, unknown_bracketed };

// Comparison of one bound against the computed Grundy number. Satisfaction
// uses absolute tolerance 1e-9; when the float slack is within 1e-6 of zero
// the verdict is re-decided by an exact integer comparison, so a tight bound
// is never misreported. With a bracketed Grundy value the verdict stays open
// (unknown_bracketed) unless the certified lower bound already violates.
struct BoundEntry {
  std::string name;
  Applicability applicability = Applicability::inapplicable;
  std::string reason;               // set when not applicable
  std::optional<double> rhs;        // formula value when defined
  std::optional<bool> satisfied;
  std::optional<double> slack;      // rhs - grundy
  std::optional<bool> equality;     // bound met with equality
};

struct BoundReport {
  std::string graph_id;
  int n = 0;
  int m = 0;
  Girth girth = Girth::infinite();
  int delta = 0;
  bool triangle_free = false;
  int gamma = 0;
  int grundy = 0;       // exact value, or the certified lower bound when !exact
  bool exact = true;
  int grundy_upper = 0; // certified upper bound, == grundy when exact
  std::vector<BoundEntry> entries;  // fixed order, one per bound above

  double twhz_rhs = 0.0;               // (n+2)/2, reported for comparison only
  bool beats_delta_condition = false;  // n - 2*delta + 2 <= gamma
  std::optional<bool> equality_characterization;  // partition search result
  std::optional<bool> odd_improves_zaker;  // odd-girth rhs < zaker rhs + 1
  std::optional<bool> odd_base_strict;     // gamma >= 2: scaled base strictly smaller
  std::optional<bool> odd_full_strict;     // odd-girth rhs < zaker rhs outright
  std::vector<std::string> anomalies;      // certified violations and mismatches
};

struct CheckOptions {
  std::string graph_id = "g0";
  std::int64_t budget_ms = 0;      // per exact solver; 0 = unlimited
  int equality_search_max_n = 24;  // skip the partition search beyond this
};

// Computes gamma and the Grundy number, evaluates every bound, and collects
// anomalies. Throws BudgetExceeded if the domination solver runs out of
// budget; a Grundy budget overrun yields a bracketed report instead.
BoundReport check_all(const Graph& g, const CheckOptions& options = {});

}  // namespace grundylab
