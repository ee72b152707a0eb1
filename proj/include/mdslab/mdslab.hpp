#pragma once

// Quantum light scattering from a dissipative magneto-dielectric slab moving
// uniformly parallel to its faces: laboratory-frame material tensors,
// reflection/transmission/absorption, quantum noise normalization,
// quadrature squeezing and photon statistics.

#include "mdslab/complex_mat.hpp"
#include "mdslab/effective_medium.hpp"
#include "mdslab/errors.hpp"
#include "mdslab/kinematics.hpp"
#include "mdslab/lorentz.hpp"
#include "mdslab/observables.hpp"
#include "mdslab/scattering.hpp"
#include "mdslab/selftest.hpp"
#include "mdslab/sweep.hpp"
