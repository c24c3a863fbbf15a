#pragma once

#include "decosim/cavity.hpp"
#include "decosim/density.hpp"
#include "decosim/doublet.hpp"
#include "decosim/estimate.hpp"
#include "decosim/evolve.hpp"
#include "decosim/fit.hpp"
#include "decosim/gamma_law.hpp"
#include "decosim/ion.hpp"
#include "decosim/laguerre.hpp"
#include "decosim/matrix.hpp"
#include "decosim/propagate.hpp"
#include "decosim/quadrature.hpp"
#include "decosim/spectral.hpp"
#include "decosim/version.hpp"
