#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "decosim/gamma_law.hpp"

namespace decosim {

namespace detail {

template <class F>
double simpson(F&& f, double a, double fa, double b, double fb, double m,
               double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_step(F&& f, double a, double fa, double b, double fb, double m,
                     double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature with a relative tolerance on the whole
/// integral.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double tol_rel = 1e-12) {
  if (!(b > a)) throw std::invalid_argument("integrate_adaptive: b must be > a");
  const double fa = f(a);
  const double fb = f(b);
  // seed the error scale with a coarse composite estimate
  double rough = 0.0;
  const int seed_n = 64;
  const double h = (b - a) / seed_n;
  double prev = fa;
  for (int i = 1; i <= seed_n; ++i) {
    const double x = a + i * h;
    const double fx = (i == seed_n) ? fb : f(x);
    rough += 0.5 * h * (prev + fx);
    prev = fx;
  }
  const double tol = tol_rel * std::max(std::abs(rough), 1e-300);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = detail::simpson(f, a, fa, b, fb, m, fm);
  return detail::adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 60);
}

/// Raw moment int pdf(t') t'^k dt' of the Gamma kernel by quadrature.
/// For shape >= 1 the pdf itself is integrated over a window covering the
/// mass; for shape < 1 the substitution u = (t'/tau)^shape removes the
/// endpoint singularity.
inline double gamma_pdf_moment(const GammaTimeLaw& law, int k,
                               double tol_rel = 1e-12) {
  law.validate();
  if (law.t == 0.0) throw std::invalid_argument("gamma_pdf_moment: t = 0");
  if (k < 0) throw std::invalid_argument("gamma_pdf_moment: k < 0");
  const double s = law.t / law.tau;
  if (s >= 1.0) {
    const double sigma = std::sqrt((s + k)) * law.tau;
    const double hi = (s + k) * law.tau + 50.0 * sigma + 50.0 * law.tau;
    const double lo = std::max(0.0, (s + k) * law.tau - 50.0 * sigma);
    return integrate_adaptive(
        [&](double x) { return gamma_pdf(law, x) * std::pow(x, k); }, lo, hi,
        tol_rel);
  }
  // transformed integrand e^{-u^{1/s}} u^{k/s} tau^k / (s Gamma(s)), smooth
  // at u = 0
  const double y_up = s + k + 40.0 * std::sqrt(s + k) + 40.0;
  const double u_up = std::pow(y_up, s);
  const double norm = std::pow(law.tau, k) / (s * std::tgamma(s));
  return norm * integrate_adaptive(
                    [&](double u) {
                      if (u <= 0.0) return (k == 0) ? 1.0 : 0.0;
                      const double y = std::pow(u, 1.0 / s);
                      return std::exp(-y) * std::pow(u, k / s);
                    },
                    0.0, u_up, tol_rel);
}

/// Raw moment of the pulse-area density.
inline double area_pdf_moment(const PulseAreaLaw& law, int k,
                              double tol_rel = 1e-12) {
  law.validate();
  if (law.t == 0.0) throw std::invalid_argument("area_pdf_moment: t = 0");
  const double s = law.t / law.tau;
  const double scale = law.omega * law.tau;
  if (s < 1.0) {
    // delegate through the time kernel; the area density is the same shape
    GammaTimeLaw g{law.t, law.tau};
    return std::pow(law.omega, k) * gamma_pdf_moment(g, k, tol_rel);
  }
  const double sigma = std::sqrt(s + k) * scale;
  const double hi = (s + k) * scale + 50.0 * sigma + 50.0 * scale;
  const double lo = std::max(0.0, (s + k) * scale - 50.0 * sigma);
  return integrate_adaptive(
      [&](double a) { return area_pdf(law, a) * std::pow(a, k); }, lo, hi,
      tol_rel);
}

struct DistributionMoments {
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
};

inline DistributionMoments gamma_law_moments(const GammaTimeLaw& law,
                                             double tol_rel = 1e-12) {
  const double m1 = gamma_pdf_moment(law, 1, tol_rel);
  const double m2 = gamma_pdf_moment(law, 2, tol_rel);
  const double m3 = gamma_pdf_moment(law, 3, tol_rel);
  DistributionMoments mom;
  mom.mean = m1;
  mom.variance = m2 - m1 * m1;
  mom.skewness =
      (m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1) / std::pow(mom.variance, 1.5);
  return mom;
}

inline DistributionMoments area_law_moments(const PulseAreaLaw& law,
                                            double tol_rel = 1e-12) {
  const double m1 = area_pdf_moment(law, 1, tol_rel);
  const double m2 = area_pdf_moment(law, 2, tol_rel);
  const double m3 = area_pdf_moment(law, 3, tol_rel);
  DistributionMoments mom;
  mom.mean = m1;
  mom.variance = m2 - m1 * m1;
  mom.skewness =
      (m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1) / std::pow(mom.variance, 1.5);
  return mom;
}

}  // namespace decosim
