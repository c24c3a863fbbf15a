#pragma once

#include <array>
#include <string>

#include "decosim/matrix.hpp"
#include "decosim/spectral.hpp"

namespace decosim {

/// Effective two-level reduction of one Rabi doublet: |lower> <-> |upper>
/// coupled at the given frequency. The generator is rabi * sigma_x, so the
/// Bohr frequency of the pair is 2*rabi, matching cos(2*rabi*t) oscillations.
struct DoubletModel {
  double rabi = 0.0;  // rad/s
  std::array<std::string, 2> labels{"lower", "upper"};

  void validate() const {
    if (!(rabi > 0.0)) throw std::invalid_argument("DoubletModel: rabi must be > 0");
  }
};

inline HermitianGenerator doublet_generator(const DoubletModel& m) {
  m.validate();
  ComplexMatrix h(2);
  h(0, 1) = m.rabi;
  h(1, 0) = m.rabi;
  return HermitianGenerator(std::move(h));
}

}  // namespace decosim
