// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/spin.hpp"

#include "etsg/error.hpp"

namespace etsg {

SpinFourVector boost_spin(const WaveVector& k, double m,
                          const BlochVector& tau) {
  if (!(m > 0)) fail(errc::invalid_argument, "boost_spin: mass must be positive");
  if (std::abs(tau.norm() - 1.0) > 1e-9)
    fail(errc::invalid_argument, "boost_spin: tau must be a unit vector");
  const double stx = 0.5 * tau.tx, sty = 0.5 * tau.ty, stz = 0.5 * tau.tz;
  const double kk = k.magnitude();
  if (kk == 0.0) return {0.0, stx, sty, stz};
  const double e = std::sqrt(kk * kk + m * m);
  const double gamma = e / m;
  const double betabar = kk / e;
  const double hx = k.kx / kk, hy = k.ky / kk, hz = k.kz / kk;
  const double proj = hx * stx + hy * sty + hz * stz;
  SpinFourVector s;
  s.s0 = gamma * betabar * proj;
  s.sx = (gamma - 1.0) * proj * hx + stx;
  s.sy = (gamma - 1.0) * proj * hy + sty;
  s.sz = (gamma - 1.0) * proj * hz + stz;
  return s;
}

Mat4c gamma_spin_operator(const SpinFourVector& s) {
  const Mat2c ss = sigma_dot(s.sx, s.sy, s.sz);
  return Mat4c::from_blocks(ss, cplx(-s.s0) * Mat2c::identity(),
                            cplx(s.s0) * Mat2c::identity(), cplx(-1.0) * ss);
}

double positive_subspace_commutator(const WaveVector& k, double m,
                                    const SpinFourVector& s,
                                    const SpinState& chi) {
  const Bispinor psi = positive_energy_spinor(k, m, chi);
  const Mat4c comm = commutator(gamma_spin_operator(s), hamiltonian(k, m));
  return (comm * psi).norm();
}

BlochVector bloch_from_chi(const SpinState& chi) {
  const double nn = chi.norm();
  if (nn < 1e-14) fail(errc::invalid_argument, "bloch_from_chi: zero state");
  const cplx l1 = chi.l1 / nn, l2 = chi.l2 / nn;
  const cplx cross = std::conj(l1) * l2;
  return {2.0 * cross.real(), 2.0 * cross.imag(),
          std::norm(l1) - std::norm(l2)};
}

SpinState chi_from_bloch(const BlochVector& tau) {
  if (std::abs(tau.norm() - 1.0) > 1e-9)
    fail(errc::invalid_argument, "chi_from_bloch: tau must be a unit vector");
  // the azimuth is unobservable at the poles; canonicalize them exactly
  if (std::abs(tau.tx) + std::abs(tau.ty) < 1e-15)
    return tau.tz > 0 ? SpinState{1.0, 0.0} : SpinState{0.0, 1.0};
  const double tz = std::clamp(tau.tz, -1.0, 1.0);
  const double theta = std::acos(tz);
  const double phi = std::atan2(tau.ty, tau.tx);
  SpinState chi;
  chi.l1 = std::cos(0.5 * theta);
  chi.l2 = std::sin(0.5 * theta) * std::exp(cplx(0.0, phi));
  return chi;
}

}  // namespace etsg
