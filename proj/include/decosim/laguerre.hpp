#pragma once

#include <stdexcept>

namespace decosim {

/// Generalized Laguerre polynomial L_n^alpha(x) by the ascending three-term
/// recurrence (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1}.
/// Forward-stable in the x <= 1, n <= 64 regime used here.
inline double laguerre_assoc(int n, double alpha, double x) {
  if (n < 0) throw std::invalid_argument("laguerre_assoc: n must be >= 0");
  if (x < 0.0) throw std::invalid_argument("laguerre_assoc: x must be >= 0");
  double prev = 1.0;            // L_0
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;  // L_1
  for (int k = 1; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace decosim
