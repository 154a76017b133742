#ifndef ETSG_SPIN_HPP
#define ETSG_SPIN_HPP

// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

// Relativistic spin description: Lorentz boost of the rest-frame spin
// four-vector, the gamma5 gamma^mu s_mu projector, Bloch-vector conversion.

#include "etsg/dirac.hpp"
#include "etsg/linalg.hpp"
#include "etsg/spin_types.hpp"

namespace etsg {

// s^mu = (s0, sv) with s^mu p_mu = s0 E - sv.k = 0 after boosting.
// Rest-frame magnitude is 1/2 (hbar = 1).
struct SpinFourVector {
  double s0 = 0;
  double sx = 0, sy = 0, sz = 0;
};

// Boost the rest-frame spin (1/2) tau to momentum k:
//   s0 = gamma betabar (khat.st),  sv = (gamma-1)(khat.st) khat + st
// with gamma = E/m, betabar = |k|/E, st = tau/2.
SpinFourVector boost_spin(const WaveVector& k, double m, const BlochVector& tau);

// Gamma = [[sigma.sv, -s0], [s0, -sigma.sv]]; satisfies
// Gamma |Psi'(chi)> = +-(1/2)|Psi'(chi)> on the positive-energy subspace.
Mat4c gamma_spin_operator(const SpinFourVector& s);

// || [Gamma, H] Psi'(chi) ||; vanishes when s is boosted consistently with
// (k, m) and Psi' is the positive-energy spinor.
double positive_subspace_commutator(const WaveVector& k, double m,
                                    const SpinFourVector& s,
                                    const SpinState& chi);

// |chi><chi| = (1 + tau.sigma)/2. chi_from_bloch keeps l1 real and
// nonnegative; at the south pole (tz = -1) the unobservable azimuth is
// canonicalized to zero.
BlochVector bloch_from_chi(const SpinState& chi);
SpinState chi_from_bloch(const BlochVector& tau);

}  // namespace etsg

#endif
