// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

// Exercises the shared-library C surface: handles, error codes, result
// structs. Physics-level coverage lives with the core unit suites.

#include <cmath>
#include <cstring>

#include "doctest.h"
#include "etsg.h"

namespace {
constexpr double kDeg = M_PI / 180.0;
}

TEST_CASE("model lifecycle and queries") {
  etsg_model* model = nullptr;
  REQUIRE(etsg_model_create(3.0, 0.25, 1.0, &model) == ETSG_OK);
  REQUIRE(model != nullptr);

  etsg_model_info info;
  REQUIRE(etsg_model_query(model, &info) == ETSG_OK);
  CHECK(info.refractive_index == doctest::Approx(16.0 / 15.0));
  CHECK(info.phi_cr1 / kDeg == doctest::Approx(64.9192).epsilon(1e-4));
  CHECK(info.phi_cr2 / kDeg == doctest::Approx(30.0).epsilon(1e-9));
  CHECK(info.k_incident == doctest::Approx(std::sqrt(8.0)));
  etsg_model_free(model);
}

TEST_CASE("creation failures map to statuses") {
  etsg_model* model = nullptr;
  CHECK(etsg_model_create(0.5, 0.25, 1.0, &model) == ETSG_ERR_INVALID_ARGUMENT);
  CHECK(model == nullptr);
  CHECK(etsg_model_create(3.0, 5.0, 1.0, &model) == ETSG_ERR_KLEIN_REGIME);
  CHECK(std::strlen(etsg_last_error()) > 0);
  CHECK(etsg_model_create(3.0, 0.25, 1.0, nullptr) == ETSG_ERR_NULL_POINTER);
  CHECK(std::strcmp(etsg_status_str(ETSG_OK), "ok") == 0);
}

TEST_CASE("point evaluation: propagating and evanescent rows") {
  etsg_model* model = nullptr;
  REQUIRE(etsg_model_create(3.0, 0.25, 1.0, &model) == ETSG_OK);
  const double tau[3] = {0.0, 1.0, 0.0};

  etsg_point_result p;
  REQUIRE(etsg_eval_point(model, 30.0 * kDeg, 0.0, tau, &p) == ETSG_OK);
  CHECK(p.evanescent == 0);
  CHECK(p.phi_t / kDeg == doctest::Approx(33.51).epsilon(1e-3));
  CHECK(p.r_coeff + p.t_coeff == doctest::Approx(1.0).epsilon(1e-12));
  // B = iA at this spin
  CHECK(p.b_re == doctest::Approx(-p.a_im).epsilon(1e-12));
  CHECK(p.b_im == doctest::Approx(p.a_re).epsilon(1e-12));
  CHECK(std::abs(p.dz_r) < 1e-10);  // zero crossing at 30 deg
  CHECK(p.dz_t < 0.0);

  etsg_point_result ev;
  REQUIRE(etsg_eval_point(model, 70.0 * kDeg, 0.0, tau, &ev) == ETSG_OK);
  CHECK(ev.evanescent == 1);
  CHECK(ev.r_coeff == 1.0);
  CHECK(ev.t_coeff == 0.0);
  CHECK(std::isnan(ev.phi_t));
  CHECK(std::isnan(ev.dz_t));
  CHECK(ev.q > 0.0);

  // bad spin vector
  const double bad[3] = {0.0, 0.5, 0.0};
  CHECK(etsg_eval_point(model, 30.0 * kDeg, 0.0, bad, &p) ==
        ETSG_ERR_INVALID_ARGUMENT);
  etsg_model_free(model);
}

TEST_CASE("near-critical flag and oblique (ky != 0) rows") {
  etsg_model* model = nullptr;
  REQUIRE(etsg_model_create(3.0, 0.25, 1.0, &model) == ETSG_OK);
  etsg_model_info info;
  REQUIRE(etsg_model_query(model, &info) == ETSG_OK);
  const double tau[3] = {0.0, 1.0, 0.0};

  etsg_point_result p;
  REQUIRE(etsg_eval_point(model, info.phi_cr1 - 1e-7, 0.0, tau, &p) == ETSG_OK);
  CHECK(p.evanescent == 0);
  CHECK(p.near_critical == 1);
  CHECK(p.dz_t < -10.0);  // the transmitted shift blows up here

  // oblique incidence populates both lateral components
  const double tgen[3] = {0.36, 0.48, 0.8};
  REQUIRE(etsg_eval_point(model, 25.0 * kDeg, 0.8, tgen, &p) == ETSG_OK);
  CHECK(p.evanescent == 0);
  CHECK(std::abs(p.dy_r) > 1e-6);
  CHECK(std::abs(p.dz_r) > 1e-6);
  CHECK(p.r_coeff + p.t_coeff == doctest::Approx(1.0).epsilon(1e-12));
  etsg_model_free(model);
}

TEST_CASE("shift check: analytic vs finite differences through the C API") {
  etsg_model* model = nullptr;
  REQUIRE(etsg_model_create(3.0, 0.25, 1.0, &model) == ETSG_OK);
  const double tau[3] = {0.0, 0.92, 0.39191835884530846};
  etsg_shift_check chk;
  REQUIRE(etsg_shift_check_run(model, 60.0 * kDeg, tau, &chk) == ETSG_OK);
  CHECK(chk.dz_r_analytic == doctest::Approx(0.0592).epsilon(2e-3));
  CHECK(chk.dz_r_rel_gap < 1e-6);
  CHECK(chk.dz_t_rel_gap < 1e-6);
  CHECK(chk.dz_t_analytic < 0.0);
  etsg_model_free(model);
}

TEST_CASE("trajectory through the C API") {
  const double tau[3] = {0.0, 1.0, 0.0};
  etsg_trajectory_result t;
  REQUIRE(etsg_trajectory_run(3.0, 1.0, 0.01, 2.0e5, 4000, tau, &t) == ETSG_OK);
  CHECK(t.magnitude == doctest::Approx(0.0233).epsilon(0.01));
  CHECK(t.rel_gap < 0.01);
  CHECK(t.energy_final == doctest::Approx(2003.0));
  CHECK(t.dz < 0.0);  // electron convention: raw increment points to -z

  CHECK(etsg_trajectory_run(0.5, 1.0, 0.01, 10.0, 100, tau, &t) ==
        ETSG_ERR_BELOW_REST);
}

TEST_CASE("wavepacket through the C API at a coarse aperture") {
  etsg_model* model = nullptr;
  REQUIRE(etsg_model_create(3.0, 0.25, 1.0, &model) == ETSG_OK);
  const double tau[3] = {0.0, 1.0, 0.0};
  etsg_wavepacket_result w;
  REQUIRE(etsg_wavepacket_run(model, 60.0 * kDeg, tau, 200.0, &w) == ETSG_OK);
  CHECK(w.rel_err < 0.05);
  CHECK(w.measured == doctest::Approx(w.analytic).epsilon(0.05));
  CHECK(w.reflected_fraction == doctest::Approx(w.r_coeff).epsilon(0.02));

  // band against the critical angle
  CHECK(etsg_wavepacket_run(model, 64.8 * kDeg, tau, 20.0, &w) ==
        ETSG_ERR_BAND_CROSSES_CRITICAL);
  etsg_model_free(model);
}
