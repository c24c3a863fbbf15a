#pragma once

#include "decosim/density.hpp"
#include "decosim/matrix.hpp"
#include "decosim/spectral.hpp"

namespace decosim {

/// exp(-iGt) rho exp(+iGt) with the decomposition already at hand.
inline DensityMatrix evolve_with(const SpectralDecomposition& sd,
                                 const DensityMatrix& rho0, double t) {
  if (t < 0.0) throw std::invalid_argument("evolve_unitary: t must be >= 0");
  const std::size_t n = rho0.dim();
  if (sd.eigenvectors.dim() != n) {
    throw std::invalid_argument("evolve_unitary: dimension mismatch");
  }
  const ComplexMatrix& u = sd.eigenvectors;
  ComplexMatrix rt = adjoint(u) * rho0.matrix() * u;
  std::vector<cplx> ph(n);
  for (std::size_t m = 0; m < n; ++m) {
    ph[m] = std::exp(cplx(0.0, -sd.eigenvalues[m] * t));
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k) rt(m, k) *= ph[m] * std::conj(ph[k]);
  return DensityMatrix(u * rt * adjoint(u));
}

inline DensityMatrix evolve_unitary(const DensityMatrix& rho0,
                                    const HermitianGenerator& g, double t) {
  if (g.dim() != rho0.dim()) {
    throw std::invalid_argument("evolve_unitary: dimension mismatch");
  }
  return evolve_with(spectral_decompose(g), rho0, t);
}

}  // namespace decosim
