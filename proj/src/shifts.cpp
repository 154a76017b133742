// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/shifts.hpp"

#include <algorithm>
#include <cmath>

#include "etsg/error.hpp"
#include "etsg/spin.hpp"

namespace etsg {

namespace {

// internal lengths are hbar/(mc); Compton-wavelength values are m/(2 pi)
// times that
double to_compton(double natural, double m) { return natural * m / (2.0 * M_PI); }

struct OmegaSet {
  double o1, o2, o3;
  double d1y, d1z, d2y, d2z, d3y, d3z;
};

// Reflected-wave spectral invariants and their on-shell k_y / k_z partials
// (E, V0 fixed; kx, kx' vary along the shell).
OmegaSet omega_reflected(const BarrierConfig& cfg, double kx, double ky,
                         double kz) {
  const double n = refractive_index(cfg);
  const double s = n - 1.0;
  const double e = cfg.energy, m = cfg.mass;
  OmegaSet w;
  if (std::abs(s) < 1e-14) {
    // V0 -> 0: every Omega carries a factor (n-1); divide it out using the
    // on-shell identity Omega1 = 2(n-1)[ky^2 + kz^2 + m(E+m)]
    w.o1 = 2.0 * (ky * ky + kz * kz + m * (e + m));
    w.o2 = 2.0 * kx * ky;
    w.o3 = 2.0 * kx * kz;
    w.d1y = 4.0 * ky;
    w.d1z = 4.0 * kz;
    w.d2y = 2.0 * (kx - ky * ky / kx);
    w.d2z = -2.0 * ky * kz / kx;
    w.d3y = -2.0 * ky * kz / kx;
    w.d3z = 2.0 * (kx - kz * kz / kx);
    return w;
  }
  const double kxp2 = (e - cfg.barrier) * (e - cfg.barrier) - m * m - ky * ky -
                      kz * kz;
  w.o1 = kx * kx - (ky * ky + kz * kz) * s * s - kxp2 * n * n;
  w.o2 = 2.0 * kx * ky * s;
  w.o3 = 2.0 * kx * kz * s;
  w.d1y = 4.0 * s * ky;
  w.d1z = 4.0 * s * kz;
  w.d2y = 2.0 * s * (kx - ky * ky / kx);
  w.d2z = -2.0 * s * ky * kz / kx;
  w.d3y = -2.0 * s * ky * kz / kx;
  w.d3z = 2.0 * s * (kx - kz * kz / kx);
  return w;
}

// Transmitted-wave invariants Omega_k and partials.
OmegaSet omega_transmitted(const BarrierConfig& cfg, double kx, double ky,
                           double kz, double kxp) {
  const double n = refractive_index(cfg);
  const double s = n - 1.0;
  const double kappa1 = 1.0 / kx + n / kxp;
  OmegaSet w;
  w.o1 = kx + n * kxp;
  w.o2 = s * ky;
  w.o3 = s * kz;
  w.d1y = -ky * kappa1;
  w.d1z = -kz * kappa1;
  w.d2y = s;
  w.d2z = 0.0;
  w.d3y = 0.0;
  w.d3z = s;
  return w;
}

// tau-weighted pair combination shared by both channels:
// [ty (d1 o3 - o1 d3) + tx (d2 o3 - o2 d3) - tz (d1 o2 - o1 d2)] / sum sq.
ShiftVector omega_combine(const OmegaSet& w, const BlochVector& tau) {
  const double ss = w.o1 * w.o1 + w.o2 * w.o2 + w.o3 * w.o3;
  ShiftVector out;
  out.dy = (tau.ty * (w.d1y * w.o3 - w.o1 * w.d3y) +
            tau.tx * (w.d2y * w.o3 - w.o2 * w.d3y) -
            tau.tz * (w.d1y * w.o2 - w.o1 * w.d2y)) /
           ss;
  out.dz = (tau.ty * (w.d1z * w.o3 - w.o1 * w.d3z) +
            tau.tx * (w.d2z * w.o3 - w.o2 * w.d3z) -
            tau.tz * (w.d1z * w.o2 - w.o1 * w.d2z)) /
           ss;
  return out;
}

void require_unit_tau(const BlochVector& tau, const char* who) {
  if (std::abs(tau.norm() - 1.0) > 1e-9)
    fail(errc::invalid_argument, std::string(who) + ": tau must be a unit vector");
}

void require_on_shell(const WaveVector& k, const BarrierConfig& cfg,
                      const char* who) {
  const double shell = cfg.energy * cfg.energy - cfg.mass * cfg.mass;
  const double kk2 = k.kx * k.kx + k.ky * k.ky + k.kz * k.kz;
  if (std::abs(kk2 - shell) > 1e-8 * std::max(1.0, shell))
    fail(errc::invalid_argument, std::string(who) + ": k off the energy shell");
  if (!(k.kx > 0)) fail(errc::invalid_argument, std::string(who) + ": kx <= 0");
}

TransmittedChannel require_propagating(const BarrierConfig& cfg, double ky,
                                       double kz, const char* who) {
  const TransmittedChannel ch = transmitted_channel(cfg, ky, kz);
  if (!ch.propagating)
    fail(errc::evanescent_channel, std::string(who) + ": evanescent channel");
  return ch;
}

}  // namespace

double shift_reflected_ky0(const BarrierConfig& cfg, double phi_in,
                           double tau_y) {
  if (std::abs(tau_y) > 1.0 + 1e-12)
    fail(errc::invalid_argument, "shift_reflected_ky0: |tau_y| > 1");
  const CriticalAngles cr = critical_angles(cfg);
  if (!(phi_in >= 0.0 && phi_in < cr.phi_cr1))
    fail(errc::out_of_angular_range,
         "shift_reflected_ky0: phi outside [0, phi_cr1)");
  const double e = cfg.energy, m = cfg.mass;
  const double c = std::cos(phi_in), sn = std::sin(phi_in);
  const double t2 = (sn / c) * (sn / c);
  const double natural = std::sqrt((e - m) / (e + m)) * e * c * (t2 - m / e) /
                         (e * e * sn * sn + m * m * c * c);
  return to_compton(tau_y * natural, m);
}

double shift_transmitted_ky0(const BarrierConfig& cfg, double phi_in,
                             double tau_y) {
  if (std::abs(tau_y) > 1.0 + 1e-12)
    fail(errc::invalid_argument, "shift_transmitted_ky0: |tau_y| > 1");
  if (!(phi_in >= 0.0 && phi_in < 0.5 * M_PI))
    fail(errc::out_of_angular_range,
         "shift_transmitted_ky0: phi outside [0, pi/2)");
  const double k = cfg.k_incident();
  const double kx = k * std::cos(phi_in), kz = k * std::sin(phi_in);
  const TransmittedChannel ch =
      require_propagating(cfg, 0.0, kz, "shift_transmitted_ky0");
  const double n = refractive_index(cfg);
  const double kxp = ch.kxp;
  const double natural = (1.0 - n) *
                         ((kx + n * kxp) + kz * kz * (1.0 / kx + n / kxp)) /
                         ((kx + n * kxp) * (kx + n * kxp) +
                          kz * kz * (1.0 - n) * (1.0 - n));
  return to_compton(tau_y * natural, cfg.mass);
}

ShiftVector shift_reflected_vector(const WaveVector& k, const BlochVector& tau,
                                   const BarrierConfig& cfg) {
  require_unit_tau(tau, "shift_reflected_vector");
  require_on_shell(k, cfg, "shift_reflected_vector");
  require_propagating(cfg, k.ky, k.kz, "shift_reflected_vector");
  const double e = cfg.energy, m = cfg.mass;
  const double kx = k.kx, ky = k.ky, kz = k.kz;
  // (tau x k).e_x, eta = (0, ky, kz), tau x e_x = (0, tz, -ty),
  // k x e_x = (0, kz, -ky). The prefactor denominator E^2 - kx^2
  // equals m^2 + ky^2 + kz^2 and never vanishes.
  const double tk_x = tau.ty * kz - tau.tz * ky;
  const double kdott = kx * tau.tx + ky * tau.ty + kz * tau.tz;
  const double pref = 1.0 / (kx * (e + m) * (e + m) * (e * e - kx * kx));
  ShiftVector out;
  out.dy = pref * (e * (e + m) * tk_x * ky + kx * kx * m * (e + m) * tau.tz +
                   kx * kx * kdott * kz);
  out.dz = pref * (e * (e + m) * tk_x * kz - kx * kx * m * (e + m) * tau.ty -
                   kx * kx * kdott * ky);
  out.dy = to_compton(out.dy, m);
  out.dz = to_compton(out.dz, m);
  return out;
}

ShiftVector shift_transmitted_vector(const WaveVector& k,
                                     const BlochVector& tau,
                                     const BarrierConfig& cfg) {
  require_unit_tau(tau, "shift_transmitted_vector");
  require_on_shell(k, cfg, "shift_transmitted_vector");
  const TransmittedChannel ch =
      require_propagating(cfg, k.ky, k.kz, "shift_transmitted_vector");
  const double n = refractive_index(cfg);
  const double kx = k.kx, ky = k.ky, kz = k.kz, kxp = ch.kxp;
  const double kappa1 = 1.0 / kx + n / kxp;
  const double kappa2 = kx + n * kxp;
  const double kappa3 =
      1.0 / (kappa2 * kappa2 + (n - 1.0) * (n - 1.0) * (ky * ky + kz * kz));
  const double tk_x = tau.ty * kz - tau.tz * ky;
  // tau x e_x = (0, tz, -ty); e_x x k = (0, -kz, ky)
  ShiftVector out;
  out.dy = -kappa3 * (n - 1.0) *
           (kappa1 * tk_x * ky - kappa2 * tau.tz + (n - 1.0) * tau.tx * (-kz));
  out.dz = -kappa3 * (n - 1.0) *
           (kappa1 * tk_x * kz - kappa2 * (-tau.ty) + (n - 1.0) * tau.tx * ky);
  out.dy = to_compton(out.dy, cfg.mass);
  out.dz = to_compton(out.dz, cfg.mass);
  return out;
}

ShiftVector shift_reflected_omega(const WaveVector& k, const BlochVector& tau,
                                  const BarrierConfig& cfg) {
  require_unit_tau(tau, "shift_reflected_omega");
  require_on_shell(k, cfg, "shift_reflected_omega");
  require_propagating(cfg, k.ky, k.kz, "shift_reflected_omega");
  const OmegaSet w = omega_reflected(cfg, k.kx, k.ky, k.kz);
  ShiftVector out = omega_combine(w, tau);
  out.dy = to_compton(out.dy, cfg.mass);
  out.dz = to_compton(out.dz, cfg.mass);
  return out;
}

ShiftVector shift_transmitted_omega(const WaveVector& k, const BlochVector& tau,
                                    const BarrierConfig& cfg) {
  require_unit_tau(tau, "shift_transmitted_omega");
  require_on_shell(k, cfg, "shift_transmitted_omega");
  const TransmittedChannel ch =
      require_propagating(cfg, k.ky, k.kz, "shift_transmitted_omega");
  const OmegaSet w = omega_transmitted(cfg, k.kx, k.ky, k.kz, ch.kxp);
  ShiftVector out = omega_combine(w, tau);
  out.dy = to_compton(out.dy, cfg.mass);
  out.dz = to_compton(out.dz, cfg.mass);
  return out;
}

BlochVector special_spin_direction(const WaveVector& k) {
  const double st = std::hypot(k.ky, k.kz);
  if (st < 1e-12 * std::max(k.magnitude(), 1e-300))
    fail(errc::normal_incidence_undefined,
         "special_spin_direction: undefined at ky = kz = 0");
  return {0.0, k.kz / st, -k.ky / st};
}

PhaseDecomposition basis_decompose(cplx A, cplx B, const BlochVector& tau_b,
                                   const SpinState& chi_ref) {
  if (std::norm(A) + std::norm(B) < 1e-200)
    fail(errc::zero_amplitude, "basis_decompose: both amplitudes vanish");
  const SpinState chi_p = chi_from_bloch(tau_b);
  const SpinState chi_m = chi_from_bloch(-tau_b);
  PhaseDecomposition out;
  out.basis = tau_b;
  out.a_prime = std::conj(chi_p.l1) * A + std::conj(chi_p.l2) * B;
  out.b_prime = std::conj(chi_m.l1) * A + std::conj(chi_m.l2) * B;
  const cplx ref_a = std::conj(chi_p.l1) * chi_ref.l1 + std::conj(chi_p.l2) * chi_ref.l2;
  const cplx ref_b = std::conj(chi_m.l1) * chi_ref.l1 + std::conj(chi_m.l2) * chi_ref.l2;
  // theta is the phase the amplitude carries, exp(+i theta); the lateral
  // shift is then -d(theta)/d(kz)
  const auto branch_phase = [](cplx amp, cplx ref) {
    if (std::abs(ref) < 1e-14) return std::arg(amp);
    return std::arg(amp / ref);
  };
  out.theta_a = branch_phase(out.a_prime, ref_a);
  out.theta_b = branch_phase(out.b_prime, ref_b);
  return out;
}

double weighted_shift(const PhaseDecomposition& decomp, double shift_a,
                      double shift_b) {
  const double wa = std::norm(decomp.a_prime);
  const double wb = std::norm(decomp.b_prime);
  if (wa + wb < 1e-200)
    fail(errc::zero_amplitude, "weighted_shift: zero total weight");
  return (wa * shift_a + wb * shift_b) / (wa + wb);
}

namespace {

double branch_phase_impl(const BarrierConfig& cfg, double ky, double kz,
                         const BlochVector& tau_b, const SpinState& chi,
                         bool transmitted) {
  const double shell = cfg.energy * cfg.energy - cfg.mass * cfg.mass;
  const double kx2 = shell - ky * ky - kz * kz;
  if (!(kx2 > 0))
    fail(errc::out_of_angular_range, "branch phase: (ky, kz) off the shell");
  const IncidentBeam beam(cfg, WaveVector{std::sqrt(kx2), ky, kz}, chi);
  const ScatteringAmplitudes amps = amplitudes_closed_form(beam);
  const PhaseDecomposition dec =
      transmitted ? basis_decompose(amps.C, amps.D, tau_b, chi)
                  : basis_decompose(amps.A, amps.B, tau_b, chi);
  return dec.theta_a;
}

}  // namespace

double reflected_branch_phase(const BarrierConfig& cfg, double ky, double kz,
                              const BlochVector& tau_b, const SpinState& chi) {
  return branch_phase_impl(cfg, ky, kz, tau_b, chi, false);
}

double transmitted_branch_phase(const BarrierConfig& cfg, double ky, double kz,
                                const BlochVector& tau_b,
                                const SpinState& chi) {
  return branch_phase_impl(cfg, ky, kz, tau_b, chi, true);
}

double fd_shift_oracle(const PhaseFn& phase, double kz0, double mass) {
  const double h = 1e-6 * std::max(std::abs(kz0), 1.0);
  // stencil values, ascending in kz
  const double offs[7] = {-2, -1, -0.5, 0, 0.5, 1, 2};
  double v[7];
  for (int i = 0; i < 7; ++i) v[i] = phase(kz0 + offs[i] * h);
  for (int i = 1; i < 7; ++i)
    if (std::abs(v[i] - v[i - 1]) > 0.5 * M_PI)
      fail(errc::branch_discontinuity,
           "fd_shift_oracle: phase jump exceeds pi/2 across the stencil");
  const auto d4 = [&](double step, double m2, double m1, double p1,
                      double p2) {
    return (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * step);
  };
  const double d_h = d4(h, v[0], v[1], v[5], v[6]);
  const double d_h2 = d4(0.5 * h, v[1], v[2], v[4], v[5]);
  const double deriv = (16.0 * d_h2 - d_h) / 15.0;  // O(h^4) Richardson step
  return to_compton(-deriv, mass);
}

bool near_critical(const BarrierConfig& cfg, double ky, double kz) {
  const TransmittedChannel ch = transmitted_channel(cfg, ky, kz);
  return ch.propagating && ch.kxp < 1e-3 * cfg.k_incident();
}

}  // namespace etsg
