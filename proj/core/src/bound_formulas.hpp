#pragma once

// Right-hand sides of the Grundy upper bounds, shared between the bounds
// module and the solver's pruning. Callers decide applicability.

#include <cmath>

namespace grundylab::formulas {

inline double delta_plus_one(int delta) { return delta + 1.0; }

inline double n_minus_gamma_plus_one(int n, int gamma) { return n - gamma + 1.0; }

inline double triangle_free_half(int n, int gamma) { return (n - gamma + 4.0) / 2.0; }

// odd girth g, whole vertex count
inline double zaker_odd_girth(int n, int g) {
  return (g - 1) / 2.0 * std::pow(static_cast<double>(n), 2.0 / (g - 1));
}

// odd girth g; degenerates to 1 when n == gamma
inline double odd_girth_gamma(int n, int gamma, int g) {
  if (n == gamma) return 1.0;
  return (g - 1) / 2.0 * std::pow(static_cast<double>(n - gamma), 2.0 / (g - 1)) + 1.0;
}

// odd girth g, max degree <= (g-1)/2, n > gamma
inline double log_low_degree(int n, int gamma) { return std::log2(static_cast<double>(n - gamma)) + 2.0; }

// even girth g
inline double even_girth_gamma(int n, int gamma, int g) {
  return (g - 2) / 2.0 * std::pow((n - gamma) / 2.0, 2.0 / (g - 2)) + 2.0;
}

inline double twhz_half(int n) { return (n + 2.0) / 2.0; }

// Largest integer <= a real-valued upper bound, with a tolerance so float
// error never tightens a bound below its true value.
inline int floor_bound(double rhs) { return static_cast<int>(std::floor(rhs + 1e-9)); }

}  // namespace grundylab::formulas
