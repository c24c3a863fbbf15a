#pragma once

#include <utility>

#include "decosim/matrix.hpp"
#include "decosim/spectral.hpp"

namespace decosim {

inline constexpr double kDensityHermTol = 1e-12;
inline constexpr double kDensityTraceTol = 1e-12;
inline constexpr double kDensityEvalFloor = -1e-10;

/// Hermitian, unit-trace, positive matrix of complex amplitudes.
class DensityMatrix {
public:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.all_finite()) {
      throw std::invalid_argument("DensityMatrix: non-finite entry");
    }
    const double scale = std::max(max_abs(m_), 1.0);
    const HermiticityDefect d = hermiticity_defect(m_);
    if (d.error > kDensityHermTol * scale) {
      throw std::invalid_argument(
          "DensityMatrix: not Hermitian, entry (" + std::to_string(d.row) +
          "," + std::to_string(d.col) + ") off by " + std::to_string(d.error));
    }
    const double trace_err = std::abs(trace(m_) - cplx(1.0));
    if (trace_err > kDensityTraceTol) {
      throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                  std::to_string(trace_err));
    }
    const std::vector<double> evals = hermitian_eigenvalues(m_);
    if (evals.front() < kDensityEvalFloor) {
      throw std::invalid_argument(
          "DensityMatrix: negative eigenvalue " + std::to_string(evals.front()));
    }
  }

  /// |index><index| on a dim-dimensional space.
  static DensityMatrix pure(std::size_t dim, std::size_t index) {
    if (index >= dim) {
      throw std::invalid_argument("DensityMatrix::pure: index out of range");
    }
    ComplexMatrix m(dim);
    m(index, index) = 1.0;
    return DensityMatrix(std::move(m));
  }

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  cplx element(std::size_t i, std::size_t j) const { return m_(i, j); }
  double population(std::size_t i) const { return m_(i, i).real(); }

private:
  ComplexMatrix m_;
};

}  // namespace decosim
