#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "decosim/matrix.hpp"

namespace decosim {

/// Hermitian operator H/hbar in angular-frequency units (rad/s).
class HermitianGenerator {
public:
  explicit HermitianGenerator(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.all_finite()) {
      throw std::invalid_argument("HermitianGenerator: non-finite entry");
    }
    const double scale = max_abs(m_);
    const HermiticityDefect d = hermiticity_defect(m_);
    if (d.error > 1e-12 * std::max(scale, 1e-300)) {
      throw std::invalid_argument(
          "HermitianGenerator: entry (" + std::to_string(d.row) + "," +
          std::to_string(d.col) + ") violates hermiticity by " +
          std::to_string(d.error));
    }
    // symmetrize so downstream algebra sees H = H^dagger to machine precision
    const std::size_t n = m_.dim();
    for (std::size_t i = 0; i < n; ++i) {
      m_(i, i) = cplx(m_(i, i).real(), 0.0);
      for (std::size_t j = i + 1; j < n; ++j) {
        const cplx h = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
        m_(i, j) = h;
        m_(j, i) = std::conj(h);
      }
    }
  }

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }

private:
  ComplexMatrix m_;
};

/// Eigenvalues (ascending, rad/s) and the unitary whose columns are the
/// corresponding eigenvectors.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

namespace detail {

// Cyclic Jacobi for complex Hermitian matrices. Rotations annihilate one
// off-diagonal pair at a time; converges quadratically for these dimensions.
// `vectors`, when non-null, accumulates the product of rotations.
inline std::vector<double> jacobi_hermitian(ComplexMatrix& a,
                                            ComplexMatrix* vectors) {
  const std::size_t n = a.dim();
  if (vectors) *vectors = ComplexMatrix::identity(n);
  const double scale = std::max(frobenius_norm(a), 1e-300);
  const double threshold = 1e-14 * scale;

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
  };

  bool converged = (n == 1);
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    if (off_norm() <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const cplx u = apq / r;  // phase of the pivot
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double tt =
            (theta >= 0.0)
                ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                : -1.0 / (-theta + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + tt * tt);
        const cplx s = (tt * c) * u;
        // A <- U^dagger A U with U(p,p)=U(q,q)=c, U(p,q)=s, U(q,p)=-conj(s)
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - std::conj(s) * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = std::conj(s) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
        if (vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const cplx vkp = (*vectors)(k, p);
            const cplx vkq = (*vectors)(k, q);
            (*vectors)(k, p) = c * vkp - std::conj(s) * vkq;
            (*vectors)(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  if (!converged && off_norm() > threshold) {
    throw std::runtime_error("jacobi_hermitian: no convergence in 100 sweeps");
  }

  std::vector<double> evals(n);
  for (std::size_t i = 0; i < n; ++i) evals[i] = a(i, i).real();
  return evals;
}

}  // namespace detail

/// Eigenvalues only, ascending.
inline std::vector<double> hermitian_eigenvalues(ComplexMatrix m) {
  std::vector<double> evals = detail::jacobi_hermitian(m, nullptr);
  std::sort(evals.begin(), evals.end());
  return evals;
}

inline SpectralDecomposition spectral_decompose(const HermitianGenerator& g) {
  ComplexMatrix a = g.matrix();
  ComplexMatrix v;
  std::vector<double> evals = detail::jacobi_hermitian(a, &v);
  const std::size_t n = a.dim();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return evals[i] < evals[j];
  });

  SpectralDecomposition sd;
  sd.eigenvalues.resize(n);
  sd.eigenvectors = ComplexMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    sd.eigenvalues[j] = evals[src];
    // first component above threshold is made real-positive
    cplx phase = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx vk = v(k, src);
      if (std::abs(vk) > 1e-12) {
        phase = std::conj(vk) / std::abs(vk);
        break;
      }
    }
    for (std::size_t k = 0; k < n; ++k) sd.eigenvectors(k, j) = phase * v(k, src);
  }
  return sd;
}

}  // namespace decosim
