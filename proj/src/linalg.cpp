// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/linalg.hpp"

#include <algorithm>
#include <utility>

#include "etsg/error.hpp"

namespace etsg {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::ok: return "ok";
    case errc::invalid_argument: return "invalid_argument";
    case errc::klein_regime: return "klein_regime";
    case errc::grazing_incidence: return "grazing_incidence";
    case errc::degenerate_direction: return "degenerate_direction";
    case errc::zero_momentum: return "zero_momentum";
    case errc::evanescent_channel: return "evanescent_channel";
    case errc::out_of_angular_range: return "out_of_angular_range";
    case errc::singular_matching: return "singular_matching";
    case errc::zero_amplitude: return "zero_amplitude";
    case errc::non_real_current: return "non_real_current";
    case errc::normal_incidence_undefined: return "normal_incidence_undefined";
    case errc::branch_discontinuity: return "branch_discontinuity";
    case errc::band_crosses_critical: return "band_crosses_critical";
    case errc::empty_profile: return "empty_profile";
    case errc::small_kx: return "small_kx";
    case errc::below_rest: return "below_rest";
    case errc::numeric: return "numeric";
  }
  return "unknown";
}

bool solve4(Mat4c a, Vec4c rhs, Vec4c& out, double pivot_tol) {
  double scale = 0;
  for (const auto& e : a.m) scale = std::max(scale, std::abs(e));
  if (scale <= 0) return false;

  for (int col = 0; col < 4; ++col) {
    int piv = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        piv = r;
      }
    }
    if (best < pivot_tol * scale) return false;
    if (piv != col) {
      for (int j = 0; j < 4; ++j) std::swap(a(piv, j), a(col, j));
      std::swap(rhs[piv], rhs[col]);
    }
    for (int r = col + 1; r < 4; ++r) {
      const cplx f = a(r, col) / a(col, col);
      a(r, col) = 0;
      for (int j = col + 1; j < 4; ++j) a(r, j) -= f * a(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  for (int r = 3; r >= 0; --r) {
    cplx s = rhs[r];
    for (int j = r + 1; j < 4; ++j) s -= a(r, j) * out[j];
    out[r] = s / a(r, r);
  }
  return true;
}

}  // namespace etsg
