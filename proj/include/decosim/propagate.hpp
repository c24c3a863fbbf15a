#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "decosim/density.hpp"
#include "decosim/evolve.hpp"
#include "decosim/gamma_law.hpp"
#include "decosim/matrix.hpp"
#include "decosim/spectral.hpp"

namespace decosim {

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
};

namespace detail {

/// Principal-branch log(1 + i*omega*tau). The real part of the argument is
/// always 1, so no branch cut is crossed.
inline cplx log_one_plus_i(double omega, double tau) {
  const double x = omega * tau;
  return cplx(0.5 * std::log1p(x * x), std::atan2(x, 1.0));
}

inline void validate_grid(const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("t_grid: empty");
  if (t_grid.front() != 0.0) {
    throw std::invalid_argument("t_grid: must start at 0");
  }
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw std::invalid_argument("t_grid: must be strictly ascending");
    }
  }
}

}  // namespace detail

/// Closed-form Gamma-averaged propagation: in the eigenbasis of g every
/// coherence is multiplied by (1 + i*omega_mn*tau)^(-t/tau); populations are
/// untouched.
inline DensityMatrix averaged_propagate(const DensityMatrix& rho0,
                                        const HermitianGenerator& g,
                                        const GammaTimeLaw& law) {
  law.validate();
  if (g.dim() != rho0.dim()) {
    throw std::invalid_argument("averaged_propagate: dimension mismatch");
  }
  if (law.t == 0.0) return rho0;
  const SpectralDecomposition sd = spectral_decompose(g);
  const ComplexMatrix& u = sd.eigenvectors;
  const std::size_t n = rho0.dim();
  ComplexMatrix rt = adjoint(u) * rho0.matrix() * u;
  const double power = law.t / law.tau;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      if (m == k) continue;
      const double w = sd.eigenvalues[m] - sd.eigenvalues[k];
      rt(m, k) *= std::exp(-power * detail::log_one_plus_i(w, law.tau));
    }
  }
  return DensityMatrix(u * rt * adjoint(u));
}

/// Monte-Carlo average of unitary evolutions over kernel-sampled times.
/// Serial accumulation in sample order; the result is the plain mean of
/// evolve_unitary outputs.
inline DensityMatrix averaged_propagate_mc(const DensityMatrix& rho0,
                                           const HermitianGenerator& g,
                                           const GammaTimeLaw& law,
                                           std::size_t n_samples,
                                           std::uint64_t seed) {
  law.validate();
  if (n_samples < 1) {
    throw std::invalid_argument("averaged_propagate_mc: n_samples must be >= 1");
  }
  if (g.dim() != rho0.dim()) {
    throw std::invalid_argument("averaged_propagate_mc: dimension mismatch");
  }
  if (law.t == 0.0) return rho0;
  const std::vector<double> times = sample_times(law, n_samples, seed);
  const SpectralDecomposition sd = spectral_decompose(g);
  const ComplexMatrix& u = sd.eigenvectors;
  const std::size_t n = rho0.dim();
  ComplexMatrix rt = adjoint(u) * rho0.matrix() * u;

  // mean dephasing factor per eigenvalue pair; diagonal stays exactly 1
  std::vector<cplx> phases(n);
  ComplexMatrix f(n);
  for (const double tp : times) {
    for (std::size_t m = 0; m < n; ++m) {
      phases[m] = std::exp(cplx(0.0, -sd.eigenvalues[m] * tp));
    }
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t k = m + 1; k < n; ++k)
        f(m, k) += phases[m] * std::conj(phases[k]);
  }
  const double inv = 1.0 / static_cast<double>(n_samples);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = m + 1; k < n; ++k) {
      const cplx fmk = f(m, k) * inv;
      rt(m, k) *= fmk;
      rt(k, m) *= std::conj(fmk);
    }
  }
  return DensityMatrix(u * rt * adjoint(u));
}

/// Numerical integration of the generalized (all-orders) phase-destroying
/// master equation: elementwise in the eigenbasis, d rho_mn / dt =
/// -(1/tau) log(1 + i*omega_mn*tau) rho_mn, advanced by classical RK4.
inline Trajectory integrate_me_generalized(const DensityMatrix& rho0,
                                           const HermitianGenerator& g,
                                           double tau,
                                           const std::vector<double>& t_grid) {
  detail::validate_grid(t_grid);
  if (tau < 0.0) throw std::invalid_argument("tau must be >= 0");
  if (g.dim() != rho0.dim()) {
    throw std::invalid_argument("integrate_me_generalized: dimension mismatch");
  }
  const SpectralDecomposition sd = spectral_decompose(g);
  const ComplexMatrix& u = sd.eigenvectors;
  const std::size_t n = rho0.dim();

  ComplexMatrix c(n);  // per-element decay coefficients
  double cmax = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      if (m == k) continue;
      const double w = sd.eigenvalues[m] - sd.eigenvalues[k];
      c(m, k) = (tau == 0.0) ? cplx(0.0, w)
                             : detail::log_one_plus_i(w, tau) / tau;
      cmax = std::max(cmax, std::abs(c(m, k)));
    }
  }

  ComplexMatrix rt = adjoint(u) * rho0.matrix() * u;
  Trajectory traj;
  traj.times = t_grid;
  traj.states.reserve(t_grid.size());
  traj.states.push_back(rho0);

  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    const double span = t_grid[i] - t_grid[i - 1];
    const std::size_t nsub =
        (cmax > 0.0)
            ? std::max<std::size_t>(1, static_cast<std::size_t>(
                                           std::ceil(span * cmax / 0.005)))
            : 1;
    const double h = span / static_cast<double>(nsub);
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t k = 0; k < n; ++k) {
        if (m == k) continue;
        // RK4 on z' = -c z collapses to the degree-4 Taylor factor of exp(-ch)
        const cplx x = c(m, k) * h;
        const cplx step =
            1.0 - x + x * x / 2.0 - x * x * x / 6.0 + x * x * x * x / 24.0;
        cplx factor = 1.0;
        for (std::size_t s = 0; s < nsub; ++s) factor *= step;
        rt(m, k) *= factor;
      }
    }
    traj.states.emplace_back(u * rt * adjoint(u));
  }
  return traj;
}

/// Second-order phase-destroying master equation
/// d rho/dt = -i[G, rho] - (tau/2) [G, [G, rho]], classical fixed-step RK4.
/// The tau/2 coefficient is the second-order expansion of the generalized
/// log generator; it reproduces the small-tau decay rate 2*Omega^2*tau.
inline Trajectory integrate_me_second_order(const DensityMatrix& rho0,
                                            const HermitianGenerator& g,
                                            double tau,
                                            const std::vector<double>& t_grid) {
  detail::validate_grid(t_grid);
  if (tau < 0.0) throw std::invalid_argument("tau must be >= 0");
  if (g.dim() != rho0.dim()) {
    throw std::invalid_argument("integrate_me_second_order: dimension mismatch");
  }
  const std::vector<double> evals = hermitian_eigenvalues(g.matrix());
  const double wmax = evals.back() - evals.front();

  double base = std::numeric_limits<double>::infinity();
  if (tau > 0.0) base = std::min(base, tau);
  if (wmax > 0.0) base = std::min(base, 2.0 * M_PI / wmax);
  const double total = t_grid.back() - t_grid.front();
  if (!std::isfinite(base)) base = total > 0.0 ? total * 50.0 : 1.0;
  const double h_rule = base / 50.0;
  if (total / h_rule > 2e8) {
    throw std::runtime_error(
        "integrate_me_second_order: step-size underflow, grid needs " +
        std::to_string(total / h_rule) +
        " steps (omega_max*tau vs grid span is pathological)");
  }

  const ComplexMatrix& gm = g.matrix();
  const ComplexMatrix g2 = gm * gm;
  const cplx mi(0.0, -1.0);
  auto deriv = [&](const ComplexMatrix& r) {
    ComplexMatrix d = mi * (gm * r - r * gm);
    if (tau > 0.0) {
      d = d - (0.5 * tau) * (g2 * r - 2.0 * (gm * r * gm) + r * g2);
    }
    return d;
  };

  ComplexMatrix rho = rho0.matrix();
  Trajectory traj;
  traj.times = t_grid;
  traj.states.reserve(t_grid.size());
  traj.states.push_back(rho0);

  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    const double span = t_grid[i] - t_grid[i - 1];
    const std::size_t nsub = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(span / h_rule)));
    const double h = span / static_cast<double>(nsub);
    for (std::size_t s = 0; s < nsub; ++s) {
      const ComplexMatrix k1 = deriv(rho);
      const ComplexMatrix k2 = deriv(rho + (0.5 * h) * k1);
      const ComplexMatrix k3 = deriv(rho + (0.5 * h) * k2);
      const ComplexMatrix k4 = deriv(rho + cplx(h) * k3);
      rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    const double drift = std::abs(trace(rho) - cplx(1.0));
    if (drift > 1e-9) {
      throw std::runtime_error(
          "integrate_me_second_order: trace drift " + std::to_string(drift));
    }
    traj.states.emplace_back(rho);
  }
  return traj;
}

}  // namespace decosim
