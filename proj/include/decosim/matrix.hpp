#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace decosim {

using cplx = std::complex<double>;

/// Dense square matrix of complex amplitudes, row-major storage.
class ComplexMatrix {
public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) {
      throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  bool all_finite() const {
    for (const cplx& z : data_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

inline void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                             const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
  }
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matrix product");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

inline ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = s * a(i, j);
  return c;
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matrix sum");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matrix difference");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = std::conj(a(j, i));
  return c;
}

inline cplx trace(const ComplexMatrix& a) {
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

inline double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matrix comparison");
  double m = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

/// Largest |a_ij - conj(a_ji)| together with the offending index pair.
struct HermiticityDefect {
  double error = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
};

inline HermiticityDefect hermiticity_defect(const ComplexMatrix& a) {
  HermiticityDefect d;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double e = std::abs(a(i, j) - std::conj(a(j, i)));
      if (e > d.error) d = {e, i, j};
    }
  }
  return d;
}

}  // namespace decosim
