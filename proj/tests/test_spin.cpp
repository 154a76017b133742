// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/spin.hpp"

#include <random>

#include "doctest.h"
#include "etsg/error.hpp"

using namespace etsg;

namespace {

BlochVector rand_tau(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  double x, y, z, n;
  do {
    x = g(rng); y = g(rng); z = g(rng);
    n = std::sqrt(x * x + y * y + z * z);
  } while (n < 1e-6);
  return {x / n, y / n, z / n};
}

}  // namespace

TEST_CASE("boost_spin: rest frame and the transverse component") {
  const SpinFourVector rest = boost_spin({0, 0, 0}, 1.0, {0, 0, 1});
  CHECK(rest.s0 == 0.0);
  CHECK(rest.sz == 0.5);

  // momentum along x, spin along y: unchanged, s0 = 0
  const SpinFourVector sy = boost_spin({2.0, 0, 0}, 1.0, {0, 1, 0});
  CHECK(sy.s0 == 0.0);
  CHECK(sy.sx == 0.0);
  CHECK(sy.sy == 0.5);

  // momentum along x, spin along x at E = 3: s0 = |k|/(2m), sx = gamma/2
  const double kmag = std::sqrt(8.0);
  const SpinFourVector sx = boost_spin({kmag, 0, 0}, 1.0, {1, 0, 0});
  CHECK(sx.s0 == doctest::Approx(kmag / 2.0).epsilon(1e-14));
  CHECK(sx.sx == doctest::Approx(1.5).epsilon(1e-14));
  // s.p orthogonality
  CHECK(std::abs(sx.s0 * 3.0 - sx.sx * kmag) < 1e-13);
}

TEST_CASE("boost_spin: s.p = 0 for random draws") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g(0.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const WaveVector k{g(rng), g(rng), g(rng)};
    const BlochVector tau = rand_tau(rng);
    const SpinFourVector s = boost_spin(k, 1.0, tau);
    const double e = free_energy(k, 1.0);
    CHECK(std::abs(s.s0 * e - s.sx * k.kx - s.sy * k.ky - s.sz * k.kz) < 1e-10);
  }
}

TEST_CASE("gamma_spin_operator: rest-frame block form and zero trace") {
  const Mat4c g = gamma_spin_operator({0.0, 0.0, 0.0, 0.5});
  CHECK(g(0, 0) == cplx(0.5));
  CHECK(g(1, 1) == cplx(-0.5));
  CHECK(g(2, 2) == cplx(-0.5));
  CHECK(g(3, 3) == cplx(0.5));
  CHECK(g(0, 2) == cplx(0));

  std::mt19937_64 rng(22);
  std::normal_distribution<double> gs;
  for (int i = 0; i < 20; ++i) {
    const Mat4c gg =
        gamma_spin_operator({gs(rng), gs(rng), gs(rng), gs(rng)});
    CHECK(std::abs(gg.trace()) == 0.0);
  }
}

TEST_CASE("gamma operator has +-1/2 eigenvalues on the positive subspace") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g(0.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const WaveVector k{g(rng), g(rng), g(rng)};
    const BlochVector tau = rand_tau(rng);
    const SpinFourVector s = boost_spin(k, 1.0, tau);
    const Mat4c gam = gamma_spin_operator(s);
    const Bispinor plus = positive_energy_spinor(k, 1.0, chi_from_bloch(tau));
    const Bispinor minus = positive_energy_spinor(k, 1.0, chi_from_bloch(-tau));
    CHECK((gam * plus - cplx(0.5) * plus).norm() < 1e-10);
    CHECK((gam * minus + cplx(0.5) * minus).norm() < 1e-10);
  }
}

TEST_CASE("positive_subspace_commutator") {
  // k = 0 gives s0 = 0 and an exactly vanishing commutator
  CHECK(positive_subspace_commutator({0, 0, 0}, 1.0,
                                     boost_spin({0, 0, 0}, 1.0, {0, 0, 1}),
                                     SpinState{}) == 0.0);

  std::mt19937_64 rng(24);
  std::normal_distribution<double> g(0.0, 1.5);
  for (int i = 0; i < 50; ++i) {
    const WaveVector k{g(rng), g(rng), g(rng)};
    const BlochVector tau = rand_tau(rng);
    const SpinFourVector s = boost_spin(k, 1.0, tau);
    CHECK(positive_subspace_commutator(k, 1.0, s, chi_from_bloch(tau)) < 1e-10);
  }

  // a negative-energy spinor is not annihilated
  const WaveVector k{1.0, 0.4, -0.3};
  const SpinFourVector s = boost_spin(k, 1.0, {0, 0, 1});
  const Mat4c gam = gamma_spin_operator(s);
  const Mat4c h = hamiltonian(k, 1.0);
  const auto spinors = helicity_spinors(k, 1.0);
  const double res = (commutator(gam, h) * spinors[2]).norm();
  CHECK(res > 0.1);
}

TEST_CASE("bloch round trips and special states") {
  const BlochVector up = bloch_from_chi(SpinState{1.0, 0.0});
  CHECK(up.tz == doctest::Approx(1.0));

  // (1, i)/sqrt2 points along +y
  const SpinState ypl{1.0 / std::sqrt(2.0), cplx(0, 1) / std::sqrt(2.0)};
  const BlochVector ty = bloch_from_chi(ypl);
  CHECK(ty.ty == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(ty.tx) < 1e-15);
  CHECK(std::abs(ty.tz) < 1e-15);

  // south pole canonicalization
  const SpinState south = chi_from_bloch({0, 0, -1});
  CHECK(std::abs(south.l1) == 0.0);
  CHECK(south.l2 == cplx(1.0));

  std::mt19937_64 rng(25);
  for (int i = 0; i < 100; ++i) {
    const BlochVector tau = rand_tau(rng);
    const SpinState chi = chi_from_bloch(tau);
    CHECK(chi.l1.imag() == 0.0);
    CHECK(chi.l1.real() >= 0.0);
    const BlochVector back = bloch_from_chi(chi);
    CHECK(std::abs(back.tx - tau.tx) < 1e-12);
    CHECK(std::abs(back.ty - tau.ty) < 1e-12);
    CHECK(std::abs(back.tz - tau.tz) < 1e-12);
    // the ratio l2/l1 determines the state; round trip preserves it
    if (std::abs(chi.l1) > 1e-8) {
      const SpinState again = chi_from_bloch(back);
      CHECK(std::abs(again.l2 / again.l1 - chi.l2 / chi.l1) < 1e-10);
    }
  }
}

TEST_CASE("bloch_from_chi ignores the global phase") {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> u(0, 2 * M_PI);
  for (int i = 0; i < 50; ++i) {
    const BlochVector tau = rand_tau(rng);
    const SpinState chi = chi_from_bloch(tau);
    const cplx rot = std::exp(cplx(0, u(rng)));
    const BlochVector t2 = bloch_from_chi({rot * chi.l1, rot * chi.l2});
    CHECK(std::abs(t2.tx - tau.tx) < 1e-12);
    CHECK(std::abs(t2.ty - tau.ty) < 1e-12);
    CHECK(std::abs(t2.tz - tau.tz) < 1e-12);
  }
}
