#pragma once

#include <cmath>
#include <stdexcept>

#include "decosim/cavity.hpp"

namespace decosim {

/// Invert the small-tau decay law: tau = gamma / (2 Omega^2).
inline double estimate_tau_small(double gamma, double omega) {
  if (gamma < 0.0) throw std::invalid_argument("estimate_tau_small: gamma < 0");
  if (!(omega > 0.0)) throw std::invalid_argument("estimate_tau_small: omega <= 0");
  return gamma / (2.0 * omega * omega);
}

/// Invert the exact decay law gamma(tau) = log(1+4 Omega^2 tau^2)/(2 tau) by
/// bisection for the smallest root (the small-tau branch). gamma(tau) is not
/// monotone over all tau, so the search is bracketed on
/// [gamma/(2 Omega^2), 1e3 * gamma/(2 Omega^2)].
inline double estimate_tau_exact(double gamma, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("estimate_tau_exact: omega <= 0");
  if (gamma < 0.0) throw std::invalid_argument("estimate_tau_exact: gamma < 0");
  if (gamma == 0.0) return 0.0;

  const auto rate = [omega](double tau) {
    return gamma_nu_exact(omega, tau).gamma;
  };
  const double tau0 = estimate_tau_small(gamma, omega);
  // rate(tau0) < gamma always (log concavity), so grow the upper end until
  // the target is bracketed
  double lo = tau0;
  double hi = tau0;
  bool bracketed = false;
  while (hi < 1e3 * tau0) {
    hi = std::min(hi * 2.0, 1e3 * tau0);
    if (rate(hi) >= gamma) {
      bracketed = true;
      break;
    }
    lo = hi;
  }
  if (!bracketed) {
    throw std::runtime_error(
        "estimate_tau_exact: no root in bracket; the requested rate exceeds "
        "the attainable maximum, use estimate_tau_small instead");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (rate(mid) < gamma) {
      lo = mid;
    } else {
      hi = mid;
    }
    if ((hi - lo) <= 1e-12 * lo) break;
  }
  return 0.5 * (lo + hi);
}

/// Mean transit time sqrt(pi) w / v and its spread from a fractional
/// velocity uncertainty.
struct TransitTime {
  double t_mean = 0.0;  // seconds
  double delta_t = 0.0; // seconds
};

inline TransitTime transit_time_spread(double waist, double v_mean,
                                       double frac_v) {
  if (!(waist > 0.0) || !(v_mean > 0.0) || frac_v < 0.0) {
    throw std::invalid_argument("transit_time_spread: invalid inputs");
  }
  TransitTime tt;
  tt.t_mean = std::sqrt(M_PI) * waist / v_mean;
  tt.delta_t = tt.t_mean * frac_v;
  return tt;
}

}  // namespace decosim
