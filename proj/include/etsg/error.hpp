#ifndef ETSG_ERROR_HPP
#define ETSG_ERROR_HPP

// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include <stdexcept>
#include <string>

namespace etsg {

enum class errc {
  ok = 0,
  invalid_argument,
  klein_regime,
  grazing_incidence,
  degenerate_direction,
  zero_momentum,
  evanescent_channel,
  out_of_angular_range,
  singular_matching,
  zero_amplitude,
  non_real_current,
  normal_incidence_undefined,
  branch_discontinuity,
  band_crosses_critical,
  empty_profile,
  small_kx,
  below_rest,
  numeric,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw error(code, msg);
}

const char* errc_name(errc code) noexcept;

}  // namespace etsg

#endif
