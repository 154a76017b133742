#ifndef ETSG_SPIN_TYPES_HPP
#define ETSG_SPIN_TYPES_HPP

// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/linalg.hpp"

namespace etsg {

// Two-component spin state (l1, l2), |l1|^2 + |l2|^2 = 1.
struct SpinState {
  cplx l1{1.0}, l2{0.0};

  double norm() const { return std::sqrt(std::norm(l1) + std::norm(l2)); }
};

// Unit vector on the Bloch sphere.
struct BlochVector {
  double tx = 0, ty = 0, tz = 1;

  double norm() const { return std::sqrt(tx * tx + ty * ty + tz * tz); }
  BlochVector operator-() const { return {-tx, -ty, -tz}; }
};

}  // namespace etsg

#endif
