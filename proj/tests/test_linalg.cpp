// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/linalg.hpp"

#include <random>

#include "doctest.h"

using namespace etsg;

TEST_CASE("pauli algebra") {
  const Mat2c xy = pauli_x() * pauli_y();
  const Mat2c expect = cplx(0, 1) * pauli_z();
  CHECK((xy - expect).m[0] == cplx(0, 0));
  const Mat2c sq = pauli_y() * pauli_y();
  CHECK(sq(0, 0) == cplx(1, 0));
  CHECK(sq(0, 1) == cplx(0, 0));
}

TEST_CASE("sigma_dot matches component expansion") {
  const Mat2c s = sigma_dot(0.3, -1.2, 0.7);
  const Mat2c ref = cplx(0.3) * pauli_x() + cplx(-1.2) * pauli_y() +
                    cplx(0.7) * pauli_z();
  for (int i = 0; i < 4; ++i) CHECK(std::abs(s.m[i] - ref.m[i]) == 0.0);
}

TEST_CASE("solve4 recovers random solutions") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    Mat4c a;
    Vec4c x;
    for (int i = 0; i < 16; ++i) a.m[i] = cplx(g(rng), g(rng));
    for (int i = 0; i < 4; ++i) x[i] = cplx(g(rng), g(rng));
    const Vec4c rhs = a * x;
    Vec4c sol;
    REQUIRE(solve4(a, rhs, sol));
    CHECK((sol - x).norm() < 1e-10 * (1.0 + x.norm()));
  }
}

TEST_CASE("solve4 rejects rank-deficient systems") {
  Mat4c a;  // two identical rows
  for (int j = 0; j < 4; ++j) {
    a(0, j) = cplx(j + 1, 0);
    a(1, j) = cplx(j + 1, 0);
    a(2, j) = cplx(0, j);
    a(3, j) = cplx(1, j * j);
  }
  Vec4c rhs{{1.0, 1.0, 1.0, 1.0}};
  Vec4c sol;
  CHECK_FALSE(solve4(a, rhs, sol));
}

TEST_CASE("solve4 needs pivoting when the leading entry vanishes") {
  Mat4c a;
  a(0, 1) = 1;  // zero leading pivot
  a(1, 0) = 1;
  a(2, 2) = 1;
  a(3, 3) = 1;
  Vec4c rhs{{cplx(2), cplx(3), cplx(4), cplx(5)}};
  Vec4c sol;
  REQUIRE(solve4(a, rhs, sol));
  CHECK(std::abs(sol[0] - cplx(3)) < 1e-14);
  CHECK(std::abs(sol[1] - cplx(2)) < 1e-14);
}

TEST_CASE("adjoint and frobenius norm") {
  Mat4c a;
  a(0, 3) = cplx(1, 2);
  const Mat4c ad = adjoint(a);
  CHECK(ad(3, 0) == cplx(1, -2));
  CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(5.0)));
}
