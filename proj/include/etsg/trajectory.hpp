#ifndef ETSG_TRAJECTORY_HPP
#define ETSG_TRAJECTORY_HPP

// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

// Transmission through a continuous linear potential (uniform field along
// +x), accumulated slab by slab. Per slab the step result applies with
// V0 -> e E0 dx; the electron's local energy grows affinely along the path,
// E(x) = E0 + e E0field x. The accumulated magnitude matches the closed-form
// trajectory integral.

#include "etsg/shifts.hpp"
#include "etsg/spin_types.hpp"

namespace etsg {

struct FieldConfig {
  double field;        // E0 > 0, uniform field along +x, natural units
  double energy0;      // initial energy, units m c^2
  double mass = 1.0;
  int charge_sign = -1;  // electron convention q = -e

  FieldConfig(double field_, double energy0_, double mass_ = 1.0);
};

// One-slab lateral shift (Compton wavelengths):
//   dl = q dx / (2 kx^3 (E + m)) { [(tau x k).Efield] eta - kx^2 (tau x Efield) }
// with eta = (0, ky, kz). Valid only while kx is not small; kx >= 0.1 |k|
// enforced.
ShiftVector local_shift_increment(const WaveVector& k, const BlochVector& tau,
                                  double energy, const FieldConfig& field,
                                  double dx);

// Normal-incidence launch k = (k(E0), 0, 0); accumulates raw signed
// increments with the slab-center energy (midpoint rule). Converges to
// closed_form_trajectory in magnitude as steps grow.
ShiftVector propagate(const FieldConfig& field, double x_max, long steps,
                      const BlochVector& tau);

// (1/4pi) [ sqrt((xi-1)/(xi+1)) ]_{xi0}^{xi1}, xi = E/(m c^2), in Compton
// wavelengths. Requires energy1 >= energy0 > m.
double closed_form_trajectory(double energy0, double energy1, double m);

}  // namespace etsg

#endif
