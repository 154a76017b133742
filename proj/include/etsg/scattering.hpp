#ifndef ETSG_SCATTERING_HPP
#define ETSG_SCATTERING_HPP

// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

// Plane-wave scattering at the electrostatic step V(x>0) = V0: kinematics,
// boundary matching at x = 0, closed-form amplitudes, probability currents,
// reflection/transmission coefficients and the two critical angles.

#include "etsg/dirac.hpp"
#include "etsg/spin_types.hpp"

namespace etsg {

// Step parameters in units of m c^2 (mass itself is a free parameter,
// default 1). Construction enforces E > m (propagating incident wave) and
// the Klein guard E - V0 + m > 0.
struct BarrierConfig {
  double energy;
  double barrier;
  double mass;

  BarrierConfig(double energy_, double barrier_, double mass_ = 1.0);

  double k_incident() const;  // |k| = sqrt(E^2 - m^2)
};

// n = (E + m) / (E - V0 + m); n > 1 iff V0 > 0.
double refractive_index(const BarrierConfig& cfg);

// phi_cr1 (total reflection) and phi_cr2 (reflected-shift zero crossing),
// radians. phi_cr1 = pi/2 when V0 = 0; 0 when no angle transmits.
struct CriticalAngles {
  double phi_cr1;
  double phi_cr2;
};
CriticalAngles critical_angles(const BarrierConfig& cfg);

// Longitudinal wavevector behind the step: kx'^2 = (E-V0)^2 - m^2 - ky^2
// - kz^2. Negative discriminant means an evanescent wave decaying as
// exp(-q x).
struct TransmittedChannel {
  bool propagating;
  double kxp;  // valid when propagating
  double q;    // valid when evanescent

  cplx kxp_complex() const { return propagating ? cplx(kxp) : cplx(0.0, q); }
};
TransmittedChannel transmitted_channel(const BarrierConfig& cfg, double ky,
                                       double kz);

// Incident plane wave: on-shell k with kx > 0 and a unit spin state.
struct IncidentBeam {
  BarrierConfig config;
  WaveVector k;
  SpinState chi;

  IncidentBeam(const BarrierConfig& cfg, const WaveVector& k_,
               const SpinState& chi_);

  double phi_in() const { return std::atan2(std::hypot(k.ky, k.kz), k.kx); }
};

// Beam at in-plane angle phi (radians) with transverse component ky:
// kx = sqrt(k^2 - ky^2) cos(phi), kz = sqrt(k^2 - ky^2) sin(phi).
IncidentBeam beam_from_angle(const BarrierConfig& cfg, double phi_in,
                             const SpinState& chi, double ky = 0.0);

struct ScatteringAmplitudes {
  cplx A, B;  // reflected
  cplx C, D;  // transmitted
  TransmittedChannel channel;
};

// Dense 4x4 complex solve of the continuity system M c = d (LU, partial
// pivoting); the C, D unknowns are solved in the printed sqrt-rescaled
// variables and unscaled afterward. For the evanescent branch the matrix
// entry kx' = i q is used unchanged.
ScatteringAmplitudes matching_solve(const IncidentBeam& beam);

// Same amplitudes from the printed rational expressions.
ScatteringAmplitudes amplitudes_closed_form(const IncidentBeam& beam);

// j_x = <state| alpha_x |state>. Rejects states whose current has a
// non-negligible imaginary part.
double current_x(const Bispinor& state);

// R = |A|^2 + |B|^2; T = |kx' E| / |kx (E - V0)| (|C|^2 + |D|^2) on the
// propagating branch, (1, 0) on the evanescent one. R + T = 1.
struct Coefficients {
  double R;
  double T;
};
Coefficients coefficients(const ScatteringAmplitudes& amps,
                          const IncidentBeam& beam);

// phi_r = phi_in; tan(phi_t) = kz / kx'. ky = 0 and a propagating channel
// required.
struct BeamAngles {
  double phi_in;
  double phi_r;
  double phi_t;
};
BeamAngles angles(const IncidentBeam& beam);

}  // namespace etsg

#endif
