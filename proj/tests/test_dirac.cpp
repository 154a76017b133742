// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/dirac.hpp"

#include <random>

#include "doctest.h"
#include "etsg/error.hpp"
#include "etsg/spin.hpp"

using namespace etsg;

namespace {

WaveVector rand_k(std::mt19937_64& rng, double scale = 2.0) {
  std::normal_distribution<double> g(0.0, scale);
  return {g(rng), g(rng), g(rng)};
}

}  // namespace

TEST_CASE("dirac matrices: beta structure and algebra") {
  const auto& d = dirac_matrices();
  CHECK(d.beta(0, 0) == cplx(1));
  CHECK(d.beta(1, 1) == cplx(1));
  CHECK(d.beta(2, 2) == cplx(-1));
  CHECK(d.beta(3, 3) == cplx(-1));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(d.beta(i, j) == cplx(0));

  const Mat4c id = Mat4c::identity();
  CHECK((d.alpha_x * d.alpha_x - id).frobenius_norm() == 0.0);
  CHECK((d.alpha_y * d.alpha_y - id).frobenius_norm() == 0.0);
  CHECK((d.alpha_z * d.alpha_z - id).frobenius_norm() == 0.0);
  CHECK((d.beta * d.beta - id).frobenius_norm() == 0.0);
  CHECK((d.alpha_x * d.beta + d.beta * d.alpha_x).frobenius_norm() == 0.0);
  CHECK((d.alpha_y * d.beta + d.beta * d.alpha_y).frobenius_norm() == 0.0);
  CHECK((d.alpha_z * d.beta + d.beta * d.alpha_z).frobenius_norm() == 0.0);
}

TEST_CASE("hamiltonian: rest frame, dispersion, hermiticity") {
  const Mat4c h0 = hamiltonian({0, 0, 0}, 1.0);
  CHECK(h0(0, 0) == cplx(1));
  CHECK(h0(2, 2) == cplx(-1));
  CHECK(h0(0, 2) == cplx(0));

  // eigenvalues come in +-E pairs: H^2 = E^2 I
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const WaveVector k = rand_k(rng);
    const double e = free_energy(k, 1.0);
    const Mat4c h = hamiltonian(k, 1.0);
    CHECK((h * h - cplx(e * e) * Mat4c::identity()).frobenius_norm() <
          1e-12 * e * e);
    CHECK((h - adjoint(h)).frobenius_norm() < 1e-14 * h.frobenius_norm());
  }
}

TEST_CASE("free_energy basics") {
  CHECK(free_energy({0, 0, 0}, 1.0) == 1.0);
  CHECK(free_energy({2, 0, 2}, 1.0) == doctest::Approx(3.0));  // |k|^2 = 8
  double prev = 0;
  for (double kk = 0; kk < 5; kk += 0.25) {
    const double e = free_energy({kk, 0, 0}, 1.0);
    CHECK(e > prev);
    prev = e;
  }
  CHECK_THROWS_AS(free_energy({1, 0, 0}, 0.0), error);
}

TEST_CASE("positive_energy_spinor: rest frame and z momentum") {
  const Bispinor rest = positive_energy_spinor({0, 0, 0}, 1.0, SpinState{});
  CHECK(std::abs(rest[0] - cplx(1)) < 1e-15);
  CHECK(std::abs(rest[1]) + std::abs(rest[2]) + std::abs(rest[3]) < 1e-15);

  // k = z-hat, chi = up: (sqrt2+1, 0, 1, 0)/sqrt(2 sqrt2 (sqrt2+1))
  const Bispinor psi = positive_energy_spinor({0, 0, 1}, 1.0, SpinState{});
  const double nrm = 1.0 / std::sqrt(2.0 * std::sqrt(2.0) * (std::sqrt(2.0) + 1.0));
  CHECK(psi[0].real() == doctest::Approx(nrm * (std::sqrt(2.0) + 1.0)).epsilon(1e-14));
  CHECK(std::abs(psi[1]) == 0.0);
  CHECK(psi[2].real() == doctest::Approx(nrm).epsilon(1e-14));
  CHECK(std::abs(psi[3]) == 0.0);
}

TEST_CASE("positive_energy_spinor: eigen residual and unit norm") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 100; ++i) {
    const WaveVector k = rand_k(rng);
    const BlochVector tau{std::sin(u(rng)) * std::cos(6 * u(rng)),
                          std::sin(u(rng)) * std::sin(6 * u(rng)),
                          std::cos(u(rng))};
    const double n = tau.norm();
    const SpinState chi = chi_from_bloch({tau.tx / n, tau.ty / n, tau.tz / n});
    const Bispinor psi = positive_energy_spinor(k, 1.0, chi);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
    const double e = free_energy(k, 1.0);
    CHECK((hamiltonian(k, 1.0) * psi - cplx(e) * psi).norm() < 1e-12);
  }
}

TEST_CASE("helicity_spinors: eigenvalues, orthonormality, degenerate axis") {
  const WaveVector k{0.7, -0.4, 1.1};
  const auto spinors = helicity_spinors(k, 1.0);
  const double kk = k.magnitude();
  const double e = free_energy(k, 1.0);

  const Mat2c skh = sigma_dot(k.kx / kk, k.ky / kk, k.kz / kk);
  const Mat4c hel =
      cplx(0.5) * Mat4c::from_blocks(skh, Mat2c::zero(), Mat2c::zero(), skh);
  const Mat4c h = hamiltonian(k, 1.0);
  const double lam[4] = {0.5, -0.5, 0.5, -0.5};
  const double ev[4] = {e, e, -e, -e};
  for (int j = 0; j < 4; ++j) {
    CHECK((hel * spinors[j] - cplx(lam[j]) * spinors[j]).norm() < 1e-12);
    CHECK((h * spinors[j] - cplx(ev[j]) * spinors[j]).norm() < 1e-12);
  }
  // Gram matrix = identity
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx g = dot(spinors[i], spinors[j]);
      CHECK(std::abs(g - (i == j ? cplx(1) : cplx(0))) < 1e-12);
    }

  CHECK_THROWS_AS(helicity_spinors({0, 0, -1}, 1.0), error);
  CHECK_THROWS_AS(helicity_spinors({0, 0, 0}, 1.0), error);
}

TEST_CASE("diagonalizer: unitarity and diagonalization, both variants") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const WaveVector k = rand_k(rng);
    const double e = free_energy(k, 1.0);
    Mat4c g = Mat4c::zero();
    g(0, 0) = e; g(1, 1) = e; g(2, 2) = -e; g(3, 3) = -e;

    const Mat4c wp = diagonalizer(k, 1.0, Diagonalizer::Wprime);
    CHECK((adjoint(wp) * wp - Mat4c::identity()).frobenius_norm() < 1e-12);
    CHECK((adjoint(wp) * hamiltonian(k, 1.0) * wp - g).frobenius_norm() < 1e-12);

    if (k.magnitude() + k.kz > 1e-6) {
      const Mat4c w = diagonalizer(k, 1.0, Diagonalizer::W);
      CHECK((adjoint(w) * w - Mat4c::identity()).frobenius_norm() < 1e-12);
      CHECK((adjoint(w) * hamiltonian(k, 1.0) * w - g).frobenius_norm() < 1e-12);
    }
  }
}

TEST_CASE("diagonalizer: W' columns are the simple spinors") {
  const WaveVector k{0.9, 0.3, -0.5};
  const Mat4c wp = diagonalizer(k, 1.0, Diagonalizer::Wprime);
  const Bispinor psi1 = positive_energy_spinor(k, 1.0, SpinState{1.0, 0.0});
  const Bispinor psi2 = positive_energy_spinor(k, 1.0, SpinState{0.0, 1.0});
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(wp(i, 0) - psi1[i]) < 1e-14);
    CHECK(std::abs(wp(i, 1) - psi2[i]) < 1e-14);
  }
}

TEST_CASE("diagonalizer: W' rest-frame limit is the identity") {
  const Mat4c wp = diagonalizer({0, 0, 0}, 1.0, Diagonalizer::Wprime);
  CHECK((wp - Mat4c::identity()).frobenius_norm() == 0.0);
}

TEST_CASE("commutator_with_H vanishes for the block structure") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g;

  // T = identity gives O proportional to the identity
  CHECK(commutator_with_H(Mat2c::identity(), {1, 2, 3}, 1.0) < 1e-14);

  // T = sigma_z is the rotated-helicity family member
  CHECK(commutator_with_H(pauli_z(), {0.3, -0.8, 0.4}, 1.0) < 1e-12);

  for (int i = 0; i < 100; ++i) {
    Mat2c t;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) t(r, c) = cplx(g(rng), g(rng));
    const WaveVector k = rand_k(rng);
    CHECK(commutator_with_H(t, k, 1.0) < 1e-12 * (1.0 + k.magnitude() * 10));
  }
  CHECK_THROWS_AS(commutator_with_H(pauli_z(), {0, 0, 0}, 1.0), error);
}
