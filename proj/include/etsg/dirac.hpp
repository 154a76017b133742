#ifndef ETSG_DIRAC_HPP
#define ETSG_DIRAC_HPP

// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

// Free-particle Dirac algebra: alpha/beta matrices, plane-wave eigenstates,
// diagonalization matrices and the block-structure commutation check.
//
// Units: hbar = c = 1 throughout; energies in units of m c^2 when m = 1,
// wavevectors in mc/hbar.

#include <array>

#include "etsg/linalg.hpp"
#include "etsg/spin_types.hpp"

namespace etsg {

struct WaveVector {
  double kx = 0, ky = 0, kz = 0;

  double magnitude() const { return std::sqrt(kx * kx + ky * ky + kz * kz); }
};

using Bispinor = Vec4c;

struct DiracMatrices {
  Mat4c alpha_x, alpha_y, alpha_z, beta;
};

// alpha_j = sigma_x (x) sigma_j, beta = sigma_z (x) 1; integer entries.
const DiracMatrices& dirac_matrices();

// H = alpha.k + beta m in block form [[m, sigma.k], [sigma.k, -m]].
Mat4c hamiltonian(const WaveVector& k, double m);

// Positive branch of E^2 = k^2 + m^2.
double free_energy(const WaveVector& k, double m);

// Positive-energy plane-wave bispinor ((E+m) chi, (sigma.k) chi)^T normalized.
Bispinor positive_energy_spinor(const WaveVector& k, double m,
                                const SpinState& chi);

// The four helicity eigenstates: [0], [1] positive energy with helicity
// +1/2, -1/2; [2], [3] negative energy likewise. Rejects k + kz ~ 0 where
// the normalization 1/sqrt(E k (k+kz)) is singular.
std::array<Bispinor, 4> helicity_spinors(const WaveVector& k, double m);

enum class Diagonalizer { W, Wprime };

// Unitary U with U^dag H U = diag(E, E, -E, -E). Variant W has the helicity
// spinors as columns (undefined along k = -z); W' has the simpler spinors
// with one zero component each. For |k| <= 1e-12 the W' limit is direction
// dependent; the identity is returned there (documented caveat: the
// scattering pipeline never needs it).
Mat4c diagonalizer(const WaveVector& k, double m, Diagonalizer variant);

// || [H, diag(T, (sigma.khat) T (sigma.khat))] ||_F, zero for every T.
double commutator_with_H(const Mat2c& block_T, const WaveVector& k, double m);

}  // namespace etsg

#endif
