#ifndef ETSG_SHIFTS_HPP
#define ETSG_SHIFTS_HPP

// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

// Stationary-phase lateral shifts of the reflected and transmitted beams.
// A lateral displacement is -d(arg amplitude)/dk_z (or k_y), evaluated
// per spin branch and averaged with the branch probabilities. Closed forms,
// two independent algebraic routes for the general-k_y vector shifts, and a
// finite-difference phase-derivative oracle.
//
// All returned shifts are in units of the Compton wavelength h/(mc);
// internally lengths are hbar/(mc), so the conversion factor is m/(2 pi).

#include <functional>

#include "etsg/scattering.hpp"
#include "etsg/spin_types.hpp"

namespace etsg {

// Lateral displacement, Compton-wavelength units.
struct ShiftVector {
  double dy = 0;
  double dz = 0;

  ShiftVector operator-() const { return {-dy, -dz}; }
};

// (A, B) resolved in the spin basis {chi(tau_b), chi(-tau_b)} with the
// continuous branch phases theta = arg(amplitude / ref), where ref is the
// k-independent overlap <chi(+-tau_b)|chi_ref> (the (l1 -+ i l2)/sqrt(2)
// factors in the y basis). The branch carries exp(+i theta), so its lateral
// shift is -d(theta)/d(kz). A vanishing overlap falls back to the raw
// phase; the reference only fixes a constant offset and never enters
// derivatives.
struct PhaseDecomposition {
  BlochVector basis;
  cplx a_prime, b_prime;
  double theta_a, theta_b;
};
PhaseDecomposition basis_decompose(cplx A, cplx B, const BlochVector& tau_b,
                                   const SpinState& chi_ref);

// Probability-weighted average of the per-branch shifts.
double weighted_shift(const PhaseDecomposition& decomp, double shift_a,
                      double shift_b);

// Closed-form k_y = 0 shifts. The reflected one is independent of V0 and
// crosses zero at phi_cr2 = arctan sqrt(m/E); the transmitted one is
// negative for tau_y > 0 and diverges as kx' -> 0.
double shift_reflected_ky0(const BarrierConfig& cfg, double phi_in,
                           double tau_y);
double shift_transmitted_ky0(const BarrierConfig& cfg, double phi_in,
                             double tau_y);

// General-k_y vector shifts (Imbert-Fedorov type), two independent routes:
// the compact vector expressions built from tau x k, tau x e_x, k x e_x,
// and the spectral-phase route through the Omega invariants. Both reduce to
// the k_y = 0 closed forms and are regular down to normal incidence.
ShiftVector shift_reflected_vector(const WaveVector& k, const BlochVector& tau,
                                   const BarrierConfig& cfg);
ShiftVector shift_transmitted_vector(const WaveVector& k,
                                     const BlochVector& tau,
                                     const BarrierConfig& cfg);
ShiftVector shift_reflected_omega(const WaveVector& k, const BlochVector& tau,
                                  const BarrierConfig& cfg);
ShiftVector shift_transmitted_omega(const WaveVector& k,
                                    const BlochVector& tau,
                                    const BarrierConfig& cfg);

// The spin direction preserved by both reflection and transmission:
// tau = (0, kz, -ky)/sqrt(ky^2 + kz^2). Undefined at normal incidence.
BlochVector special_spin_direction(const WaveVector& k);

// -d(phase)/d(kz) by 4-point central differences with one Richardson step,
// h = 1e-6 max(|kz0|, 1); result converted to Compton-wavelength units for
// the given mass. The stencil values must be branch-continuous; adjacent
// jumps above pi/2 are rejected.
using PhaseFn = std::function<double(double)>;
double fd_shift_oracle(const PhaseFn& phase, double kz0, double mass = 1.0);

// Continuous branch phases as functions of kz at fixed (cfg, ky, chi),
// suitable for the oracle: theta of the +tau_b branch of the reflected or
// transmitted amplitude.
double reflected_branch_phase(const BarrierConfig& cfg, double ky, double kz,
                              const BlochVector& tau_b, const SpinState& chi);
double transmitted_branch_phase(const BarrierConfig& cfg, double ky, double kz,
                                const BlochVector& tau_b,
                                const SpinState& chi);

// kx' below 1e-3 |k|: the transmitted shift is blowing up toward the
// critical angle and is reported as-is with this warning.
bool near_critical(const BarrierConfig& cfg, double ky, double kz);

}  // namespace etsg

#endif
