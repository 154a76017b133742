#ifndef ETSG_VERIFY_HPP
#define ETSG_VERIFY_HPP

// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

// Self-verification: every structural identity and cross-route equivalence
// the library relies on, runnable as one deterministic suite (fixed RNG
// seed, fixed evaluation order).

#include <string>
#include <vector>

namespace etsg {

struct CheckResult {
  std::string name;
  bool pass;
  double value;  // measured residual / error
  double bound;  // tolerance it must stay below
};

// Test hook: deliberately corrupt one internal quantity so the suite's
// sensitivity can be demonstrated. kThetaASign flips the sign of the
// reflected branch phase inside the spin-flip antisymmetry check.
enum class Mutation { kNone, kThetaASign };

std::vector<CheckResult> run_invariant_suite(Mutation mutation = Mutation::kNone);

}  // namespace etsg

#endif
