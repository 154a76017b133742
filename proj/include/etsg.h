#ifndef ETSG_H
#define ETSG_H

/*
 * Copyright 2025 the etsg developers
 * Licensed under the Apache License, Version 2.0 (see LICENSE).
 *
 * C interface to the etsg library: relativistic plane-wave scattering at an
 * electrostatic potential step and the spin-dependent lateral displacements
 * of the reflected and transmitted matter waves.
 *
 * Conventions: hbar = c = 1; energies and the barrier height in units of
 * m c^2; wavevectors in mc/hbar; angles in radians at this boundary; all
 * lateral shifts in Compton wavelengths h/(mc).
 *
 * Every function returns an etsg_status; results are written through out
 * pointers. Handles are opaque and must be released with etsg_model_free.
 * The library holds no global state; a model handle may be shared across
 * threads for concurrent evaluation.
 */

#include <stddef.h>

#if defined(_WIN32)
#define ETSG_API __declspec(dllexport)
#else
#define ETSG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum etsg_status {
  ETSG_OK = 0,
  ETSG_ERR_NULL_POINTER = 1,
  ETSG_ERR_INVALID_ARGUMENT = 2,
  ETSG_ERR_KLEIN_REGIME = 3,
  ETSG_ERR_GRAZING_INCIDENCE = 4,
  ETSG_ERR_DEGENERATE_DIRECTION = 5,
  ETSG_ERR_ZERO_MOMENTUM = 6,
  ETSG_ERR_EVANESCENT_CHANNEL = 7,
  ETSG_ERR_OUT_OF_ANGULAR_RANGE = 8,
  ETSG_ERR_SINGULAR_MATCHING = 9,
  ETSG_ERR_ZERO_AMPLITUDE = 10,
  ETSG_ERR_NON_REAL_CURRENT = 11,
  ETSG_ERR_NORMAL_INCIDENCE_UNDEFINED = 12,
  ETSG_ERR_BRANCH_DISCONTINUITY = 13,
  ETSG_ERR_BAND_CROSSES_CRITICAL = 14,
  ETSG_ERR_EMPTY_PROFILE = 15,
  ETSG_ERR_SMALL_KX = 16,
  ETSG_ERR_BELOW_REST = 17,
  ETSG_ERR_NUMERIC = 18,
} etsg_status;

ETSG_API const char* etsg_status_str(etsg_status status);

/* Message for the most recent failure on the calling thread. */
ETSG_API const char* etsg_last_error(void);

ETSG_API const char* etsg_version(void);

/* ---- step model ------------------------------------------------------- */

typedef struct etsg_model etsg_model;

ETSG_API etsg_status etsg_model_create(double energy, double barrier,
                                       double mass, etsg_model** out);
ETSG_API void etsg_model_free(etsg_model* model);

typedef struct etsg_model_info {
  double refractive_index;
  double phi_cr1; /* total-reflection angle, radians */
  double phi_cr2; /* reflected-shift zero crossing, radians */
  double k_incident;
} etsg_model_info;

ETSG_API etsg_status etsg_model_query(const etsg_model* model,
                                      etsg_model_info* out);

/* ---- single-point evaluation ------------------------------------------ */

typedef struct etsg_point_result {
  double phi_r, phi_t;          /* radians; phi_t = NaN when evanescent */
  double a_re, a_im, b_re, b_im;
  double c_re, c_im, d_re, d_im;
  double r_coeff, t_coeff;
  double dy_r, dz_r;            /* reflected lateral shift, lambda_C */
  double dy_t, dz_t;            /* transmitted; NaN when evanescent */
  double kxp;                   /* kx' when propagating, else 0 */
  double q;                     /* decay constant when evanescent, else 0 */
  int evanescent;
  int near_critical;            /* kx' below 1e-3 |k| */
} etsg_point_result;

/*
 * Evaluate amplitudes, coefficients and lateral shifts at one incidence:
 * in-plane angle phi_in (radians), transverse wavevector ky, spin direction
 * tau (unit Bloch vector). Shifts at ky != 0 come from the general vector
 * forms. Rows past the critical angle return R = 1, T = 0 and NaN shifts
 * with evanescent set.
 */
ETSG_API etsg_status etsg_eval_point(const etsg_model* model, double phi_in,
                                     double ky, const double tau[3],
                                     etsg_point_result* out);

/* ---- analytic / finite-difference shift cross-check -------------------- */

typedef struct etsg_shift_check {
  double dz_r_analytic, dz_r_fd, dz_r_rel_gap;
  double dz_t_analytic, dz_t_fd, dz_t_rel_gap;
} etsg_shift_check;

ETSG_API etsg_status etsg_shift_check_run(const etsg_model* model,
                                          double phi_in, const double tau[3],
                                          etsg_shift_check* out);

/* ---- wavepacket oracle -------------------------------------------------- */

typedef struct etsg_wavepacket_result {
  double analytic;      /* stationary-phase prediction, lambda_C */
  double measured;      /* reflected intensity centroid, lambda_C */
  double rel_err;
  double reflected_fraction; /* reflected mass / incident mass */
  double r_coeff;
} etsg_wavepacket_result;

/* kz0_a is the dimensionless aperture kz0 * a. ky = 0 geometry. */
ETSG_API etsg_status etsg_wavepacket_run(const etsg_model* model,
                                         double phi_in, const double tau[3],
                                         double kz0_a,
                                         etsg_wavepacket_result* out);

/* ---- continuous-field trajectory ---------------------------------------- */

typedef struct etsg_trajectory_result {
  double dy, dz;       /* accumulated signed shift, lambda_C */
  double magnitude;
  double closed_form;  /* |shift| from the trajectory integral */
  double rel_gap;
  double energy_final;
} etsg_trajectory_result;

ETSG_API etsg_status etsg_trajectory_run(double energy0, double mass,
                                         double field, double x_max,
                                         long steps, const double tau[3],
                                         etsg_trajectory_result* out);

/* ---- self verification --------------------------------------------------*/

/* Called once per check; return 0 to keep iterating, nonzero to stop. */
typedef int (*etsg_verify_cb)(const char* name, int pass, double value,
                              double bound, void* user);

/* mutation != 0 deliberately corrupts an internal sign (test hook). */
ETSG_API etsg_status etsg_verify_run(int mutation, etsg_verify_cb callback,
                                     void* user, int* n_failed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ETSG_H */
