#pragma once

#include <cmath>

#include "decosim/cavity.hpp"
#include "decosim/laguerre.hpp"

namespace decosim {

/// Blue-sideband trapped-ion parameters. The quantitative model reduces each
/// |down,n> <-> |up,n+1> pair to an independent doublet with frequency
/// Omega_n, so delta, omega_z and phi only enter through the sideband
/// resonance condition delta = omega_z.
struct IonTrapParams {
  double omega = 0.0;    // rad/s, laser-intensity-proportional Rabi parameter
  double eta = 0.0;      // Lamb-Dicke parameter
  int n_max = 0;         // highest Fock index
  double delta = 0.0;    // rad/s, detuning
  double omega_z = 0.0;  // rad/s, trap frequency
  double phi = 0.0;      // radians, laser phase

  void validate() const {
    if (!(omega > 0.0)) throw std::invalid_argument("IonTrapParams: omega must be > 0");
    if (!(eta > 0.0 && eta < 1.0)) {
      throw std::invalid_argument("IonTrapParams: eta must be in (0,1)");
    }
    if (n_max < 0) throw std::invalid_argument("IonTrapParams: n_max must be >= 0");
    if (std::abs(delta - omega_z) > 1e-9 * std::max(std::abs(omega_z), 1.0)) {
      throw std::invalid_argument(
          "IonTrapParams: blue-sideband mode requires delta = omega_z");
    }
  }

  static IonTrapParams blue_sideband(double omega, double eta, int n_max,
                                     double omega_z = 0.0, double phi = 0.0) {
    IonTrapParams p;
    p.omega = omega;
    p.eta = eta;
    p.n_max = n_max;
    p.omega_z = omega_z;
    p.delta = omega_z;
    p.phi = phi;
    p.validate();
    return p;
  }
};

/// Doublet Rabi frequency Omega_n = Omega e^{-eta^2/2} eta L_n^1(eta^2) /
/// sqrt(n+1).
inline double ion_rabi_frequency(const IonTrapParams& p, int n) {
  p.validate();
  if (n < 0 || n > p.n_max) {
    throw std::invalid_argument("ion_rabi_frequency: n out of range");
  }
  const double x = p.eta * p.eta;
  return p.omega * std::exp(-x / 2.0) * p.eta * laguerre_assoc(n, 1.0, x) /
         std::sqrt(n + 1.0);
}

enum class DecayMode { exact, small_tau };

/// Predicted small-tau decay rate 2*Omega_n^2*tau for the n-th doublet.
inline double gamma_n_predicted(const IonTrapParams& p, double tau, int n) {
  const double wn = ion_rabi_frequency(p, n);
  return gamma_small_tau(wn, tau);
}

/// Probability of remaining in |down,n>: (1 + e^{-gamma_n t} cos(freq t))/2.
/// In exact mode the damping and oscillation frequency come from the
/// Gamma-averaged closed forms (freq = nu_n), so the value agrees with
/// averaged propagation of the doublet; small_tau mode uses 2*Omega_n^2*tau
/// and freq = 2*Omega_n.
inline double ion_probability(int n, double t, double tau,
                              const IonTrapParams& p,
                              DecayMode mode = DecayMode::exact) {
  if (t < 0.0) throw std::invalid_argument("ion_probability: t < 0");
  if (tau < 0.0) throw std::invalid_argument("ion_probability: tau < 0");
  const double wn = ion_rabi_frequency(p, n);
  double gamma, freq;
  if (mode == DecayMode::exact) {
    const GammaNu gn = gamma_nu_exact(wn, tau);
    gamma = gn.gamma;
    freq = gn.nu;
  } else {
    gamma = gamma_small_tau(wn, tau);
    freq = 2.0 * wn;
  }
  return clamp_probability(0.5 * (1.0 + std::exp(-gamma * t) * std::cos(freq * t)));
}

}  // namespace decosim
