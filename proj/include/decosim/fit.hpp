#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace decosim {

/// Sampled trace (t ascending, dimensionless values).
struct TimeSeries {
  std::vector<double> t;
  std::vector<double> y;

  void validate() const {
    if (t.size() != y.size()) {
      throw std::invalid_argument("TimeSeries: t/y length mismatch");
    }
    if (t.size() < 8) {
      throw std::invalid_argument("TimeSeries: need at least 8 points");
    }
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!(t[i] > t[i - 1])) {
        throw std::invalid_argument("TimeSeries: t must be strictly ascending");
      }
    }
  }
};

/// Result of fitting offset + sign*amplitude*e^{-gamma t} cos(nu t).
struct DampedCosineFit {
  double gamma = 0.0;      // 1/s
  double nu = 0.0;         // rad/s
  double amplitude = 0.0;  // dimensionless
  double offset = 0.0;     // dimensionless
  int sign = 1;            // +1 or -1
  double rms_residual = 0.0;
};

class FitError : public std::runtime_error {
public:
  FitError(const std::string& what, DampedCosineFit last_iterate = {})
      : std::runtime_error(what), last(last_iterate) {}
  DampedCosineFit last;
};

namespace detail {

// Solve the 4x4 system a x = b in place by Gaussian elimination with
// partial pivoting.
inline std::array<double, 4> solve4(std::array<std::array<double, 4>, 4> a,
                                    std::array<double, 4> b) {
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-300) {
      throw FitError("fit_damped_cosine: singular normal equations");
    }
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (int r = col + 1; r < 4; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int cc = col; cc < 4; ++cc) a[r][cc] -= f * a[col][cc];
      b[r] -= f * b[col];
    }
  }
  std::array<double, 4> x{};
  for (int r = 3; r >= 0; --r) {
    double s = b[r];
    for (int cc = r + 1; cc < 4; ++cc) s -= a[r][cc] * x[cc];
    x[r] = s / a[r][r];
  }
  return x;
}

}  // namespace detail

/// Nonlinear least squares for a damped cosine. Initial frequency from the
/// dominant discrete-Fourier peak, initial decay from log-envelope regression
/// on the extrema, then Levenberg-damped Gauss-Newton.
inline DampedCosineFit fit_damped_cosine(const TimeSeries& series) {
  series.validate();
  const std::size_t n = series.t.size();
  const double t0 = series.t.front();
  const double span = series.t.back() - t0;

  double offset = 0.0;
  for (double v : series.y) offset += v;
  offset /= static_cast<double>(n);

  std::vector<double> z(n);
  double zmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = series.y[i] - offset;
    zmax = std::max(zmax, std::abs(z[i]));
  }

  // oscillation check: a trace spanning a full period crosses its mean twice
  int crossings = 0;
  double last_sign = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(z[i]) < 1e-3 * zmax) continue;
    const double s = (z[i] > 0.0) ? 1.0 : -1.0;
    if (last_sign != 0.0 && s != last_sign) ++crossings;
    last_sign = s;
  }
  if (zmax == 0.0 || crossings < 2) {
    throw FitError("fit_damped_cosine: no oscillation detected "
                   "(spectral weight at zero frequency)");
  }

  // dominant DFT bin over the actual sample times
  const std::size_t kmax = n / 2;
  std::size_t kbest = 1;
  double best_mag = -1.0;
  std::vector<double> mags(kmax + 1, 0.0);
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::complex<double> s = 0.0;
    const double wk = 2.0 * M_PI * static_cast<double>(k) / span;
    for (std::size_t i = 0; i < n; ++i) {
      s += z[i] * std::exp(std::complex<double>(0.0, -wk * (series.t[i] - t0)));
    }
    mags[k] = std::abs(s);
    if (mags[k] > best_mag) {
      best_mag = mags[k];
      kbest = k;
    }
  }
  double nu = 2.0 * M_PI * static_cast<double>(kbest) / span;
  if (kbest > 1 && kbest < kmax) {
    // parabolic refinement on the magnitude spectrum
    const double ym = mags[kbest - 1], y0 = mags[kbest], yp = mags[kbest + 1];
    const double denom = ym - 2.0 * y0 + yp;
    if (denom < 0.0) {
      const double d = 0.5 * (ym - yp) / denom;
      nu = 2.0 * M_PI * (static_cast<double>(kbest) + d) / span;
    }
  }

  // envelope decay from the trace extrema
  double gamma = 0.0;
  double amplitude = zmax;
  {
    std::vector<double> et, ev;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double a = std::abs(z[i]);
      if (a >= std::abs(z[i - 1]) && a >= std::abs(z[i + 1]) &&
          a > 0.05 * zmax) {
        et.push_back(series.t[i]);
        ev.push_back(std::log(a));
      }
    }
    if (et.size() >= 2) {
      double st = 0, sv = 0, stt = 0, stv = 0;
      for (std::size_t i = 0; i < et.size(); ++i) {
        st += et[i];
        sv += ev[i];
        stt += et[i] * et[i];
        stv += et[i] * ev[i];
      }
      const double m = static_cast<double>(et.size());
      const double det = m * stt - st * st;
      if (det > 0.0) {
        const double slope = (m * stv - st * sv) / det;
        const double icept = (sv * stt - st * stv) / det;
        gamma = std::max(0.0, -slope);
        amplitude = std::exp(icept);
      }
    }
  }
  const int sign0 = (series.y.front() >= offset) ? 1 : -1;

  // Levenberg-damped Gauss-Newton on p = (gamma, nu, amplitude, offset)
  std::array<double, 4> p{gamma, nu, amplitude, offset};
  auto ssr_of = [&](const std::array<double, 4>& q) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = std::exp(-q[0] * series.t[i]);
      const double model = q[3] + sign0 * q[2] * e * std::cos(q[1] * series.t[i]);
      const double r = model - series.y[i];
      s += r * r;
    }
    return s;
  };

  double lambda = 1e-3;
  double ssr = ssr_of(p);
  bool converged = false;
  for (int iter = 0; iter < 200 && !converged; ++iter) {
    std::array<std::array<double, 4>, 4> jtj{};
    std::array<double, 4> jtr{};
    for (std::size_t i = 0; i < n; ++i) {
      const double ti = series.t[i];
      const double e = std::exp(-p[0] * ti);
      const double co = std::cos(p[1] * ti);
      const double si = std::sin(p[1] * ti);
      const double model = p[3] + sign0 * p[2] * e * co;
      const double r = model - series.y[i];
      const std::array<double, 4> j{
          -sign0 * p[2] * ti * e * co,  // d/dgamma
          -sign0 * p[2] * ti * e * si,  // d/dnu
          sign0 * e * co,               // d/damplitude
          1.0                           // d/doffset
      };
      for (int a = 0; a < 4; ++a) {
        jtr[a] += j[a] * r;
        for (int b = 0; b < 4; ++b) jtj[a][b] += j[a] * j[b];
      }
    }

    bool stepped = false;
    for (int attempt = 0; attempt < 40 && !stepped; ++attempt) {
      std::array<std::array<double, 4>, 4> a = jtj;
      for (int d = 0; d < 4; ++d) {
        a[d][d] += lambda * std::max(jtj[d][d], 1e-300);
      }
      std::array<double, 4> step{};
      try {
        const std::array<double, 4> neg = detail::solve4(a, jtr);
        for (int d = 0; d < 4; ++d) step[d] = -neg[d];
      } catch (const FitError&) {
        lambda *= 10.0;
        continue;
      }
      std::array<double, 4> cand = p;
      for (int d = 0; d < 4; ++d) cand[d] += step[d];
      const double cand_ssr = ssr_of(cand);
      if (cand_ssr <= ssr) {
        double rel = 0.0;
        for (int d = 0; d < 4; ++d) {
          rel = std::max(rel, std::abs(step[d]) / std::max(std::abs(p[d]), 1e-30));
        }
        p = cand;
        ssr = cand_ssr;
        lambda = std::max(lambda * 0.3, 1e-14);
        stepped = true;
        if (rel < 1e-10) converged = true;
      } else {
        lambda *= 10.0;
      }
    }
    if (!stepped) converged = true;  // no downhill direction left
  }

  DampedCosineFit fit;
  fit.gamma = p[0];
  fit.nu = p[1];
  fit.amplitude = p[2];
  fit.offset = p[3];
  fit.sign = sign0;
  fit.rms_residual = std::sqrt(ssr / static_cast<double>(n));
  if (fit.amplitude < 0.0) {
    fit.amplitude = -fit.amplitude;
    fit.sign = -fit.sign;
  }
  fit.nu = std::abs(fit.nu);
  if (fit.gamma < 0.0) fit.gamma = std::max(fit.gamma, 0.0);
  if (!converged) {
    throw FitError("fit_damped_cosine: no convergence after 200 iterations", fit);
  }
  if (!(fit.nu > 0.0)) {
    throw FitError("fit_damped_cosine: degenerate frequency", fit);
  }
  return fit;
}

/// Power-law fit value = prefactor * x^exponent by ordinary least squares in
/// log-log space.
struct PowerLawFit {
  double prefactor = 0.0;
  double exponent = 0.0;
  double max_rel_dev = 0.0;
};

inline PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 3) {
    throw std::invalid_argument("fit_power_law: need at least 3 pairs");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, v] : pairs) {
    if (!(x > 0.0) || !(v > 0.0)) {
      throw std::invalid_argument("fit_power_law: inputs must be positive");
    }
    const double lx = std::log(x);
    const double lv = std::log(v);
    sx += lx;
    sy += lv;
    sxx += lx * lx;
    sxy += lx * lv;
  }
  const double m = static_cast<double>(pairs.size());
  const double det = m * sxx - sx * sx;
  if (!(det > 0.0)) {
    throw std::invalid_argument("fit_power_law: degenerate abscissae");
  }
  PowerLawFit fit;
  fit.exponent = (m * sxy - sx * sy) / det;
  fit.prefactor = std::exp((sy * sxx - sx * sxy) / det);
  for (const auto& [x, v] : pairs) {
    const double pred = fit.prefactor * std::pow(x, fit.exponent);
    fit.max_rel_dev = std::max(fit.max_rel_dev, std::abs(pred / v - 1.0));
  }
  return fit;
}

}  // namespace decosim
