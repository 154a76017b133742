// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/trajectory.hpp"

#include <cmath>

#include "etsg/error.hpp"

namespace etsg {

FieldConfig::FieldConfig(double field_, double energy0_, double mass_)
    : field(field_), energy0(energy0_), mass(mass_) {
  if (!(mass > 0))
    fail(errc::invalid_argument, "FieldConfig: mass must be positive");
  if (!(field > 0))
    fail(errc::invalid_argument, "FieldConfig: field must be positive");
  if (!(energy0 > mass))
    fail(errc::below_rest, "FieldConfig: energy0 must exceed the rest energy");
}

ShiftVector local_shift_increment(const WaveVector& k, const BlochVector& tau,
                                  double energy, const FieldConfig& field,
                                  double dx) {
  if (!(energy > field.mass))
    fail(errc::below_rest, "local_shift_increment: energy below rest");
  const double kk = k.magnitude();
  if (!(k.kx >= 0.1 * kk))
    fail(errc::small_kx, "local_shift_increment: kx below 0.1 |k|");
  const double q = static_cast<double>(field.charge_sign);  // q = -e, e = 1
  const double pref =
      q * field.field * dx / (2.0 * k.kx * k.kx * k.kx * (energy + field.mass));
  // field along +x: (tau x k).E = E0 (ty kz - tz ky); tau x E = E0 (0, tz, -ty)
  const double tk_x = tau.ty * k.kz - tau.tz * k.ky;
  ShiftVector out;
  out.dy = pref * (tk_x * k.ky - k.kx * k.kx * tau.tz);
  out.dz = pref * (tk_x * k.kz + k.kx * k.kx * tau.ty);
  const double lamc = field.mass / (2.0 * M_PI);
  out.dy *= lamc;
  out.dz *= lamc;
  return out;
}

ShiftVector propagate(const FieldConfig& field, double x_max, long steps,
                      const BlochVector& tau) {
  if (steps < 1)
    fail(errc::invalid_argument, "propagate: steps must be >= 1");
  if (!(x_max >= 0))
    fail(errc::invalid_argument, "propagate: x_max must be >= 0");
  const double dx = x_max / static_cast<double>(steps);
  ShiftVector acc;
  for (long j = 0; j < steps; ++j) {
    // slab-center energy from the affine bookkeeping E(x) = E0 + e E0field x
    const double x_mid = (static_cast<double>(j) + 0.5) * dx;
    const double e = field.energy0 + field.field * x_mid;
    const double kx = std::sqrt(e * e - field.mass * field.mass);
    const ShiftVector d =
        local_shift_increment(WaveVector{kx, 0.0, 0.0}, tau, e, field, dx);
    acc.dy += d.dy;
    acc.dz += d.dz;
  }
  return acc;
}

double closed_form_trajectory(double energy0, double energy1, double m) {
  if (!(m > 0))
    fail(errc::invalid_argument, "closed_form_trajectory: mass must be positive");
  if (!(energy0 > m))
    fail(errc::below_rest, "closed_form_trajectory: energy0 <= rest energy");
  if (!(energy1 >= energy0))
    fail(errc::invalid_argument, "closed_form_trajectory: energy1 < energy0");
  const auto g = [m](double e) {
    const double xi = e / m;
    return std::sqrt((xi - 1.0) / (xi + 1.0));
  };
  return (g(energy1) - g(energy0)) / (4.0 * M_PI);
}

}  // namespace etsg
