#pragma once

#include <algorithm>
#include <cmath>

#include "decosim/matrix.hpp"
#include "decosim/spectral.hpp"

namespace decosim {

/// Resonant atom-cavity model: Rabi frequency and Fock-space cutoff.
struct CavityQedParams {
  double omega_r = 0.0;  // rad/s
  int n_max = 1;

  void validate() const {
    if (!(omega_r > 0.0)) {
      throw std::invalid_argument("CavityQedParams: omega_r must be > 0");
    }
    if (n_max < 1) {
      throw std::invalid_argument("CavityQedParams: n_max must be >= 1");
    }
  }
};

/// Basis ordering for the truncated atom-field space: |e,n> -> 2n,
/// |g,n> -> 2n+1, n = 0..n_max.
inline std::size_t jc_index_excited(int n) { return 2 * static_cast<std::size_t>(n); }
inline std::size_t jc_index_ground(int n) { return 2 * static_cast<std::size_t>(n) + 1; }

/// Excitation-conserving atom-field coupling on the truncated Fock basis:
/// Omega_R sqrt(n+1) between |e,n> and |g,n+1>.
inline HermitianGenerator jc_hamiltonian(const CavityQedParams& p) {
  p.validate();
  const std::size_t dim = 2 * static_cast<std::size_t>(p.n_max + 1);
  ComplexMatrix h(dim);
  for (int n = 0; n + 1 <= p.n_max; ++n) {
    const double coupling = p.omega_r * std::sqrt(n + 1.0);
    h(jc_index_excited(n), jc_index_ground(n + 1)) = coupling;
    h(jc_index_ground(n + 1), jc_index_excited(n)) = coupling;
  }
  return HermitianGenerator(std::move(h));
}

inline double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

/// Undamped vacuum Rabi transfer probability (1 - cos 2*Omega_R*t)/2.
inline double vacuum_rabi_probability(double omega_r, double t) {
  if (t < 0.0) throw std::invalid_argument("vacuum_rabi_probability: t < 0");
  return clamp_probability(0.5 * (1.0 - std::cos(2.0 * omega_r * t)));
}

struct GammaNu {
  double gamma = 0.0;  // 1/s
  double nu = 0.0;     // rad/s
};

/// Exact damping rate and shifted frequency of the Gamma-averaged two-level
/// oscillation: gamma = log(1+4 Omega^2 tau^2)/(2 tau), nu = arctan(2 Omega
/// tau)/tau. tau = 0 returns the unitary limit (0, 2*Omega).
inline GammaNu gamma_nu_exact(double omega, double tau) {
  if (!(omega > 0.0)) throw std::invalid_argument("gamma_nu_exact: omega <= 0");
  if (tau < 0.0) throw std::invalid_argument("gamma_nu_exact: tau < 0");
  if (tau == 0.0) return {0.0, 2.0 * omega};
  const double x = 2.0 * omega * tau;
  return {std::log1p(x * x) / (2.0 * tau), std::atan(x) / tau};
}

/// Small-tau damping rate 2*Omega^2*tau.
inline double gamma_small_tau(double omega, double tau) {
  if (!(omega > 0.0)) throw std::invalid_argument("gamma_small_tau: omega <= 0");
  if (tau < 0.0) throw std::invalid_argument("gamma_small_tau: tau < 0");
  return 2.0 * omega * omega * tau;
}

/// Gamma-averaged vacuum Rabi probability (1 - e^{-gamma t} cos nu t)/2.
inline double damped_rabi_probability(double omega_r, double tau, double t) {
  if (t < 0.0) throw std::invalid_argument("damped_rabi_probability: t < 0");
  const GammaNu gn = gamma_nu_exact(omega_r, tau);
  return clamp_probability(
      0.5 * (1.0 - std::exp(-gn.gamma * t) * std::cos(gn.nu * t)));
}

}  // namespace decosim
