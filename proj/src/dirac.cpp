// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/dirac.hpp"

#include "etsg/error.hpp"

namespace etsg {

const DiracMatrices& dirac_matrices() {
  static const DiracMatrices d = [] {
    DiracMatrices r;
    const Mat2c z = Mat2c::zero();
    const Mat2c id = Mat2c::identity();
    r.alpha_x = Mat4c::from_blocks(z, pauli_x(), pauli_x(), z);
    r.alpha_y = Mat4c::from_blocks(z, pauli_y(), pauli_y(), z);
    r.alpha_z = Mat4c::from_blocks(z, pauli_z(), pauli_z(), z);
    r.beta = Mat4c::from_blocks(id, z, z, cplx(-1.0) * id);
    return r;
  }();
  return d;
}

Mat4c hamiltonian(const WaveVector& k, double m) {
  if (!(m > 0)) fail(errc::invalid_argument, "hamiltonian: mass must be positive");
  const Mat2c sk = sigma_dot(k.kx, k.ky, k.kz);
  return Mat4c::from_blocks(cplx(m) * Mat2c::identity(), sk, sk,
                            cplx(-m) * Mat2c::identity());
}

double free_energy(const WaveVector& k, double m) {
  if (!(m > 0)) fail(errc::invalid_argument, "free_energy: mass must be positive");
  const double kk = k.magnitude();
  return std::sqrt(kk * kk + m * m);
}

Bispinor positive_energy_spinor(const WaveVector& k, double m,
                                const SpinState& chi) {
  if (!(m > 0))
    fail(errc::invalid_argument, "positive_energy_spinor: mass must be positive");
  if (std::abs(chi.norm() - 1.0) > 1e-9)
    fail(errc::invalid_argument, "positive_energy_spinor: chi must be normalized");
  const double e = free_energy(k, m);
  const Vec2c lower = sigma_dot(k.kx, k.ky, k.kz) * Vec2c{chi.l1, chi.l2};
  const double nrm = 1.0 / std::sqrt(2.0 * e * (e + m));
  Bispinor psi;
  psi[0] = nrm * (e + m) * chi.l1;
  psi[1] = nrm * (e + m) * chi.l2;
  psi[2] = nrm * lower.a;
  psi[3] = nrm * lower.b;
  return psi;
}

std::array<Bispinor, 4> helicity_spinors(const WaveVector& k, double m) {
  if (!(m > 0))
    fail(errc::invalid_argument, "helicity_spinors: mass must be positive");
  const double kk = k.magnitude();
  if (kk < 1e-15) fail(errc::zero_momentum, "helicity_spinors: |k| ~ 0");
  if (kk + k.kz < 1e-12 * kk)
    fail(errc::degenerate_direction,
         "helicity_spinors: k ~ -z, normalization 1/sqrt(E k (k+kz)) singular");

  const double e = std::sqrt(kk * kk + m * m);
  const double up = std::sqrt(e + m);
  const double um = std::sqrt(e - m);
  const cplx kp(k.kx, k.ky);
  const cplx km(k.kx, -k.ky);
  const double s = kk + k.kz;
  const double nrm = 1.0 / (2.0 * std::sqrt(e * kk * s));

  std::array<Bispinor, 4> out;
  out[0] = {{cplx(up * s), up * kp, cplx(kk / up * s), kk / up * kp}};
  out[1] = {{-up * km, cplx(up * s), kk / up * km, cplx(-kk / up * s)}};
  out[2] = {{cplx(um * s), um * kp, cplx(-kk / um * s), -kk / um * kp}};
  out[3] = {{-um * km, cplx(um * s), -kk / um * km, cplx(kk / um * s)}};
  for (auto& v : out) v = cplx(nrm) * v;
  return out;
}

Mat4c diagonalizer(const WaveVector& k, double m, Diagonalizer variant) {
  if (!(m > 0))
    fail(errc::invalid_argument, "diagonalizer: mass must be positive");
  if (variant == Diagonalizer::W) {
    const auto cols = helicity_spinors(k, m);
    Mat4c w;
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i) w(i, j) = cols[j][i];
    return w;
  }
  const double kk = k.magnitude();
  if (kk <= 1e-12) return Mat4c::identity();  // direction-dependent limit
  const double e = std::sqrt(kk * kk + m * m);
  const double up = std::sqrt(e + m);
  const double um = std::sqrt(e - m);
  const Mat2c sk = sigma_dot(k.kx, k.ky, k.kz);
  const cplx nrm = 1.0 / std::sqrt(2.0 * e);
  return nrm * Mat4c::from_blocks(cplx(up) * Mat2c::identity(),
                                  cplx(um) * Mat2c::identity(),
                                  cplx(1.0 / up) * sk, cplx(-1.0 / um) * sk);
}

double commutator_with_H(const Mat2c& block_T, const WaveVector& k, double m) {
  const double kk = k.magnitude();
  if (kk < 1e-15) fail(errc::zero_momentum, "commutator_with_H: |k| ~ 0");
  const Mat2c skhat = sigma_dot(k.kx / kk, k.ky / kk, k.kz / kk);
  const Mat4c op = Mat4c::from_blocks(block_T, Mat2c::zero(), Mat2c::zero(),
                                      skhat * block_T * skhat);
  return commutator(hamiltonian(k, m), op).frobenius_norm();
}

}  // namespace etsg
