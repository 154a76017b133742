// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/scattering.hpp"

#include <algorithm>

#include "etsg/error.hpp"

namespace etsg {

BarrierConfig::BarrierConfig(double energy_, double barrier_, double mass_)
    : energy(energy_), barrier(barrier_), mass(mass_) {
  if (!(mass > 0))
    fail(errc::invalid_argument, "BarrierConfig: mass must be positive");
  if (!(barrier >= 0))
    fail(errc::invalid_argument, "BarrierConfig: barrier must be >= 0");
  if (!(energy > mass))
    fail(errc::invalid_argument,
         "BarrierConfig: energy must exceed mass (propagating incident wave)");
  if (!(energy - barrier + mass > 0))
    fail(errc::klein_regime,
         "BarrierConfig: E - V0 + m <= 0 enters the Klein-paradox regime");
}

double BarrierConfig::k_incident() const {
  return std::sqrt(energy * energy - mass * mass);
}

double refractive_index(const BarrierConfig& cfg) {
  const double denom = cfg.energy - cfg.barrier + cfg.mass;
  if (!(denom > 0))
    fail(errc::klein_regime, "refractive_index: Klein-paradox regime");
  return (cfg.energy + cfg.mass) / denom;
}

CriticalAngles critical_angles(const BarrierConfig& cfg) {
  const double num =
      (cfg.energy - cfg.barrier) * (cfg.energy - cfg.barrier) -
      cfg.mass * cfg.mass;
  const double den = cfg.energy * cfg.energy - cfg.mass * cfg.mass;
  CriticalAngles out;
  if (num <= 0)
    out.phi_cr1 = 0.0;  // no angle transmits
  else if (num >= den)
    out.phi_cr1 = 0.5 * M_PI;  // V0 = 0 limit
  else
    out.phi_cr1 = std::asin(std::sqrt(num / den));
  out.phi_cr2 = std::atan(std::sqrt(cfg.mass / cfg.energy));
  return out;
}

TransmittedChannel transmitted_channel(const BarrierConfig& cfg, double ky,
                                       double kz) {
  const double disc = (cfg.energy - cfg.barrier) * (cfg.energy - cfg.barrier) -
                      cfg.mass * cfg.mass - ky * ky - kz * kz;
  TransmittedChannel ch{};
  if (disc >= 0) {
    ch.propagating = true;
    ch.kxp = std::sqrt(disc);
    ch.q = 0.0;
  } else {
    ch.propagating = false;
    ch.kxp = 0.0;
    ch.q = std::sqrt(-disc);
  }
  return ch;
}

IncidentBeam::IncidentBeam(const BarrierConfig& cfg, const WaveVector& k_,
                           const SpinState& chi_)
    : config(cfg), k(k_), chi(chi_) {
  const double shell = cfg.energy * cfg.energy - cfg.mass * cfg.mass;
  const double kk2 = k.kx * k.kx + k.ky * k.ky + k.kz * k.kz;
  if (std::abs(kk2 - shell) > 1e-10 * std::max(1.0, shell))
    fail(errc::invalid_argument, "IncidentBeam: k is not on the energy shell");
  if (!(k.kx > 0) || k.kx < 1e-10 * std::sqrt(shell))
    fail(errc::grazing_incidence,
         "IncidentBeam: kx below the grazing-incidence floor");
  if (std::abs(chi.norm() - 1.0) > 1e-9)
    fail(errc::invalid_argument, "IncidentBeam: chi must be normalized");
}

IncidentBeam beam_from_angle(const BarrierConfig& cfg, double phi_in,
                             const SpinState& chi, double ky) {
  const double k = cfg.k_incident();
  const double kxz2 = k * k - ky * ky;
  if (!(kxz2 > 0))
    fail(errc::invalid_argument, "beam_from_angle: |ky| exceeds the shell");
  const double kxz = std::sqrt(kxz2);
  if (!(phi_in > -0.5 * M_PI && phi_in < 0.5 * M_PI))
    fail(errc::out_of_angular_range,
         "beam_from_angle: phi_in outside (-pi/2, pi/2)");
  WaveVector kv{kxz * std::cos(phi_in), ky, kxz * std::sin(phi_in)};
  return IncidentBeam(cfg, kv, chi);
}

namespace {

// sqrt(E (E+m)) / sqrt((E-V0)(E-V0+m)); principal branch (pure imaginary
// when E < V0, which the Klein guard still admits).
cplx cd_rescale_factor(const BarrierConfig& cfg) {
  const cplx below = cplx(cfg.energy * (cfg.energy + cfg.mass));
  const cplx above = cplx((cfg.energy - cfg.barrier) *
                          (cfg.energy - cfg.barrier + cfg.mass));
  return std::sqrt(below) / std::sqrt(above);
}

}  // namespace

ScatteringAmplitudes matching_solve(const IncidentBeam& beam) {
  const BarrierConfig& cfg = beam.config;
  const double kx = beam.k.kx, ky = beam.k.ky, kz = beam.k.kz;
  const double n = refractive_index(cfg);
  const TransmittedChannel ch = transmitted_channel(cfg, ky, kz);
  const cplx kxp = ch.kxp_complex();
  const cplx l1 = beam.chi.l1, l2 = beam.chi.l2;
  const cplx iky(0.0, ky);

  Mat4c mat;
  mat(0, 0) = n;    mat(0, 1) = 0;    mat(0, 2) = -1;          mat(0, 3) = 0;
  mat(1, 0) = 0;    mat(1, 1) = n;    mat(1, 2) = 0;           mat(1, 3) = -1;
  mat(2, 0) = kz;   mat(2, 1) = -kx - iky;
  mat(2, 2) = -kz;  mat(2, 3) = -(kxp - iky);
  mat(3, 0) = -kx + iky;               mat(3, 1) = -kz;
  mat(3, 2) = -(kxp + iky);            mat(3, 3) = kz;

  Vec4c rhs;
  rhs[0] = -l1 * n;
  rhs[1] = -l2 * n;
  rhs[2] = -(l1 * kz + l2 * (kx - iky));
  rhs[3] = -(l1 * (kx + iky) - l2 * kz);

  Vec4c sol;
  if (!solve4(mat, rhs, sol))
    fail(errc::singular_matching, "matching_solve: rank-deficient system");

  const cplx s = cd_rescale_factor(cfg);
  ScatteringAmplitudes amps;
  amps.A = sol[0];
  amps.B = sol[1];
  amps.C = sol[2] / s;
  amps.D = sol[3] / s;
  amps.channel = ch;
  return amps;
}

ScatteringAmplitudes amplitudes_closed_form(const IncidentBeam& beam) {
  const BarrierConfig& cfg = beam.config;
  const double kx = beam.k.kx, ky = beam.k.ky, kz = beam.k.kz;
  const double n = refractive_index(cfg);
  const TransmittedChannel ch = transmitted_channel(cfg, ky, kz);
  const cplx kxp = ch.kxp_complex();
  const cplx l1 = beam.chi.l1, l2 = beam.chi.l2;
  const cplx i(0.0, 1.0);
  const double kyz2 = ky * ky + kz * kz;

  const cplx den =
      kx * kx + kyz2 * (n - 1) * (n - 1) + 2.0 * kx * kxp * n + kxp * kxp * n * n;
  const cplx body = kx * kx - kyz2 * (n - 1) * (n - 1) - kxp * kxp * n * n;

  ScatteringAmplitudes amps;
  amps.A = (l1 * body + 2.0 * kx * (-i * ky * l1 + kz * l2) * (n - 1)) / den;
  amps.B = (l2 * body - 2.0 * kx * (kz * l1 - i * ky * l2) * (n - 1)) / den;
  const cplx pref = 1.0 / cd_rescale_factor(cfg);
  amps.C = pref * 2.0 * kx * n *
           (l1 * (kx + kxp * n) + kz * l2 * (n - 1) - i * ky * l1 * (n - 1)) /
           den;
  amps.D = pref * 2.0 * kx * n *
           (l2 * (kx + kxp * n) + i * ky * l2 * (n - 1) - kz * l1 * (n - 1)) /
           den;
  amps.channel = ch;
  return amps;
}

double current_x(const Bispinor& state) {
  const cplx jx = std::conj(state[0]) * state[3] + std::conj(state[1]) * state[2] +
                  std::conj(state[2]) * state[1] + std::conj(state[3]) * state[0];
  if (std::abs(jx.imag()) > 1e-10)
    fail(errc::non_real_current, "current_x: non-real expectation value");
  return jx.real();
}

Coefficients coefficients(const ScatteringAmplitudes& amps,
                          const IncidentBeam& beam) {
  Coefficients out;
  out.R = std::norm(amps.A) + std::norm(amps.B);
  if (!amps.channel.propagating) {
    out.R = 1.0;
    out.T = 0.0;
    return out;
  }
  const double e = beam.config.energy, v0 = beam.config.barrier;
  out.T = std::abs(amps.channel.kxp * e) / std::abs(beam.k.kx * (e - v0)) *
          (std::norm(amps.C) + std::norm(amps.D));
  return out;
}

BeamAngles angles(const IncidentBeam& beam) {
  if (std::abs(beam.k.ky) > 1e-12 * beam.config.k_incident())
    fail(errc::invalid_argument, "angles: defined for ky = 0 only");
  const TransmittedChannel ch =
      transmitted_channel(beam.config, beam.k.ky, beam.k.kz);
  if (!ch.propagating)
    fail(errc::evanescent_channel, "angles: no transmitted angle past phi_cr1");
  BeamAngles out;
  out.phi_in = std::atan2(beam.k.kz, beam.k.kx);
  out.phi_r = out.phi_in;
  out.phi_t = std::atan2(beam.k.kz, ch.kxp);
  return out;
}

}  // namespace etsg
