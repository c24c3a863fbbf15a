#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace decosim {

/// RNG stack behind sample_times; recorded in run metadata for reproducibility.
inline constexpr const char* kRngAlgorithm = "mt19937_64/marsaglia-tsang";

/// Gamma time law: elapsed laboratory time t and fluctuation strength tau.
/// The kernel has shape t/tau and scale tau, so mean t and variance t*tau.
struct GammaTimeLaw {
  double t = 0.0;    // seconds
  double tau = 0.0;  // seconds

  void validate() const {
    if (!(t >= 0.0)) throw std::invalid_argument("GammaTimeLaw: t must be >= 0");
    if (!(tau > 0.0)) throw std::invalid_argument("GammaTimeLaw: tau must be > 0");
    if (!std::isfinite(t / tau)) {
      throw std::invalid_argument("GammaTimeLaw: shape t/tau not finite");
    }
  }
};

/// Kernel density at evolution time tprime. The t = 0 law degenerates to a
/// Dirac delta and is rejected; callers special-case it.
inline double gamma_pdf(const GammaTimeLaw& law, double tprime) {
  law.validate();
  if (law.t == 0.0) {
    throw std::invalid_argument(
        "gamma_pdf: t = 0 degenerates to delta(t'); caller must special-case");
  }
  if (tprime < 0.0) throw std::invalid_argument("gamma_pdf: tprime must be >= 0");
  const double shape = law.t / law.tau;
  if (tprime == 0.0) {
    if (shape > 1.0) return 0.0;
    if (shape == 1.0) return 1.0 / law.tau;
    return std::numeric_limits<double>::infinity();
  }
  const double y = tprime / law.tau;
  return std::exp(-y + (shape - 1.0) * std::log(y) - std::lgamma(shape)) /
         law.tau;
}

namespace detail {

/// Marsaglia-Tsang gamma deviates on top of mt19937_64. The uniform and
/// normal stages are hand-rolled so a fixed seed gives the same stream on
/// every platform for a given build.
class GammaDeviate {
public:
  explicit GammaDeviate(std::uint64_t seed) : eng_(seed) {}

  double uniform() {  // (0,1)
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() {  // polar method, second value discarded
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    return u * std::sqrt(-2.0 * std::log(s) / s);
  }

  /// Unit-scale gamma deviate, any shape > 0.
  double gamma(double shape) {
    if (shape < 1.0) {
      // boost to shape+1, then scale back with a uniform power
      return gamma(shape + 1.0) * std::pow(uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace detail

/// n independent draws from the kernel; deterministic for a fixed seed.
inline std::vector<double> sample_times(const GammaTimeLaw& law, std::size_t n,
                                        std::uint64_t seed) {
  law.validate();
  if (law.t == 0.0) {
    throw std::invalid_argument("sample_times: t = 0 has no density");
  }
  if (n < 1) throw std::invalid_argument("sample_times: n must be >= 1");
  const double shape = law.t / law.tau;
  detail::GammaDeviate rng(seed);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = law.tau * rng.gamma(shape);
  return out;
}

/// Pulse-area law: the same kernel over the dimensionless area A with scale
/// Omega*tau, Omega being the mean Rabi frequency <A>/t.
struct PulseAreaLaw {
  double t = 0.0;      // seconds
  double tau = 0.0;    // seconds
  double omega = 0.0;  // rad/s

  void validate() const {
    if (!(t >= 0.0)) throw std::invalid_argument("PulseAreaLaw: t must be >= 0");
    if (!(tau > 0.0)) throw std::invalid_argument("PulseAreaLaw: tau must be > 0");
    if (!(omega > 0.0)) {
      throw std::invalid_argument("PulseAreaLaw: omega must be > 0");
    }
  }
};

inline double area_pdf(const PulseAreaLaw& law, double a) {
  law.validate();
  if (law.t == 0.0) {
    throw std::invalid_argument(
        "area_pdf: t = 0 degenerates to delta(A); caller must special-case");
  }
  if (a < 0.0) throw std::invalid_argument("area_pdf: area must be >= 0");
  const double scale = law.omega * law.tau;
  const double shape = law.t / law.tau;
  if (a == 0.0) {
    if (shape > 1.0) return 0.0;
    if (shape == 1.0) return 1.0 / scale;
    return std::numeric_limits<double>::infinity();
  }
  const double y = a / scale;
  return std::exp(-y + (shape - 1.0) * std::log(y) - std::lgamma(shape)) / scale;
}

/// (<A>, sigma^2(A)) = (Omega t, Omega^2 t tau).
inline std::pair<double, double> area_moments(const PulseAreaLaw& law) {
  law.validate();
  return {law.omega * law.t, law.omega * law.omega * law.t * law.tau};
}

}  // namespace decosim
