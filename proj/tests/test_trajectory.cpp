// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/trajectory.hpp"

#include "doctest.h"
#include "etsg/error.hpp"

using namespace etsg;

TEST_CASE("closed form trajectory") {
  CHECK(closed_form_trajectory(3.0, 3.0, 1.0) == 0.0);
  // E0 = 3m, E1 -> infinity approaches (1/4pi)(1 - 1/sqrt2)
  const double lim = (1.0 - 1.0 / std::sqrt(2.0)) / (4.0 * M_PI);
  CHECK(closed_form_trajectory(3.0, 1e9, 1.0) ==
        doctest::Approx(lim).epsilon(1e-4));
  CHECK(lim == doctest::Approx(0.02331).epsilon(1e-3));
  // from rest the accumulated shift saturates at 1/(4 pi)
  CHECK(closed_form_trajectory(1.0 + 1e-12, 1e12, 1.0) ==
        doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-5));
  CHECK_THROWS_AS(closed_form_trajectory(0.9, 2.0, 1.0), error);
  CHECK_THROWS_AS(closed_form_trajectory(3.0, 2.0, 1.0), error);
}

TEST_CASE("local increment: geometry and sign") {
  FieldConfig field(0.01, 3.0, 1.0);

  // normal incidence, tau along the field: all terms vanish
  const WaveVector kn{std::sqrt(8.0), 0, 0};
  const ShiftVector zero = local_shift_increment(kn, {1, 0, 0}, 3.0, field, 0.1);
  CHECK(zero.dy == 0.0);
  CHECK(zero.dz == 0.0);

  // normal incidence, tau = +y: increment along -z (electron charge),
  // magnitude e E0 dx / (2 k (E + m)) in Compton units
  const ShiftVector d = local_shift_increment(kn, {0, 1, 0}, 3.0, field, 0.1);
  const double mag = 0.01 * 0.1 / (2.0 * std::sqrt(8.0) * 4.0) / (2.0 * M_PI);
  CHECK(d.dy == 0.0);
  CHECK(d.dz == doctest::Approx(-mag).epsilon(1e-14));

  // spin flip negates the increment exactly
  const ShiftVector dm = local_shift_increment(kn, {0, -1, 0}, 3.0, field, 0.1);
  CHECK(dm.dz == -d.dz);

  // kx guard
  const WaveVector grazing{0.01, 0, std::sqrt(8.0 - 1e-4)};
  CHECK_THROWS_AS(local_shift_increment(grazing, {0, 1, 0}, 3.0, field, 0.1),
                  error);
}

TEST_CASE("propagate: short path, long path, convergence order") {
  FieldConfig field(0.01, 3.0, 1.0);

  // x_max -> 0 gives no displacement
  const ShiftVector none = propagate(field, 0.0, 1000, {0, 1, 0});
  CHECK(none.dy == 0.0);
  CHECK(none.dz == 0.0);

  // long path at E0 = 3 approaches 0.0233 lambda_C in magnitude
  const double x_long = 2.0e5;
  const ShiftVector acc = propagate(field, x_long, 4000, {0, 1, 0});
  const double mag = std::hypot(acc.dy, acc.dz);
  CHECK(mag == doctest::Approx(0.0233).epsilon(0.01));
  const double cf =
      closed_form_trajectory(3.0, 3.0 + 0.01 * x_long, 1.0);
  CHECK(mag == doctest::Approx(cf).epsilon(0.01));

  // richer slab count converges to the closed form; midpoint rule is
  // second order, so halving dx shrinks the gap by about 4
  const double x_med = 300.0;
  const double target = closed_form_trajectory(3.0, 6.0, 1.0);
  double prev_gap = -1;
  for (long steps : {1000L, 2000L, 4000L}) {
    const ShiftVector a = propagate(field, x_med, steps, {0, 1, 0});
    const double gap = std::abs(std::hypot(a.dy, a.dz) - target);
    if (prev_gap > 0) CHECK(gap < 0.6 * prev_gap);
    prev_gap = gap;
  }

  // antisymmetry of the accumulated shift
  const ShiftVector p = propagate(field, 500.0, 1000, {0.36, 0.48, 0.8});
  const ShiftVector n = propagate(field, 500.0, 1000, {-0.36, -0.48, -0.8});
  CHECK(p.dy == -n.dy);
  CHECK(p.dz == -n.dz);
}

TEST_CASE("field config validation") {
  CHECK_THROWS_AS(FieldConfig(-0.01, 3.0, 1.0), error);
  CHECK_THROWS_AS(FieldConfig(0.01, 0.5, 1.0), error);
  CHECK_THROWS_AS(propagate(FieldConfig(0.01, 3.0, 1.0), 10.0, 0, {0, 1, 0}),
                  error);
}
