#ifndef ETSG_WAVEPACKET_HPP
#define ETSG_WAVEPACKET_HPP

// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

// First-principles beam oracle: synthesize a finite-width reflected beam
// from plane-wave components with their exact complex amplitudes and
// measure the lateral displacement of its intensity centroid. The spinor
// structure is frozen at the carrier kz0 (the stationary-phase construction);
// the spectral amplitudes keep their full kz dependence.

#include <vector>

#include "etsg/scattering.hpp"

namespace etsg {

struct BeamProfile {
  std::vector<double> z_grid;    // positions, hbar/(mc) units
  std::vector<double> intensity;  // >= 0
  double centroid = 0;            // sum z I / sum I, natural units
  double mass = 0;                // integral of intensity
};

// Hard-aperture spectrum sqrt(2/pi) sin[(kz0 - kz) a] / (kz0 - kz);
// value sqrt(2/pi) a at kz = kz0, zeros at kz0 +- j pi / a.
double spectrum_F(double kz, double kz0, double a);

struct SamplingSpec {
  int quadrature_nodes = 16384;  // midpoint rule over the spectral band
  int grid_points = 8192;        // uniform z grid on [-4a, 4a]
  double band_halfwidth = 0.0;   // 0 = default 40 pi / a, clipped to validity
};

// Reflected beam at x = 0 for the carrier beam (phi from the beam's k,
// ky = 0 required) with half-aperture a. The spectral band is symmetric
// about kz0 and clipped to the propagating window; if even half the sinc
// main lobe (pi / 2a) does not fit below the critical angle the stationary
// phase construction is invalid and the call is rejected.
BeamProfile reflected_profile(const IncidentBeam& beam, double a,
                              const SamplingSpec& spec = {});

// centroid - reference, converted to Compton wavelengths.
double centroid_shift(const BeamProfile& profile, double reference,
                      double mass = 1.0);

}  // namespace etsg

#endif
