// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "etsg/error.hpp"
#include "etsg/scattering.hpp"
#include "etsg/shifts.hpp"
#include "etsg/spin.hpp"
#include "etsg/trajectory.hpp"
#include "etsg/verify.hpp"
#include "etsg/wavepacket.hpp"

namespace {

thread_local std::string t_last_error;

etsg_status map_code(etsg::errc code) {
  using etsg::errc;
  switch (code) {
    case errc::ok: return ETSG_OK;
    case errc::invalid_argument: return ETSG_ERR_INVALID_ARGUMENT;
    case errc::klein_regime: return ETSG_ERR_KLEIN_REGIME;
    case errc::grazing_incidence: return ETSG_ERR_GRAZING_INCIDENCE;
    case errc::degenerate_direction: return ETSG_ERR_DEGENERATE_DIRECTION;
    case errc::zero_momentum: return ETSG_ERR_ZERO_MOMENTUM;
    case errc::evanescent_channel: return ETSG_ERR_EVANESCENT_CHANNEL;
    case errc::out_of_angular_range: return ETSG_ERR_OUT_OF_ANGULAR_RANGE;
    case errc::singular_matching: return ETSG_ERR_SINGULAR_MATCHING;
    case errc::zero_amplitude: return ETSG_ERR_ZERO_AMPLITUDE;
    case errc::non_real_current: return ETSG_ERR_NON_REAL_CURRENT;
    case errc::normal_incidence_undefined:
      return ETSG_ERR_NORMAL_INCIDENCE_UNDEFINED;
    case errc::branch_discontinuity: return ETSG_ERR_BRANCH_DISCONTINUITY;
    case errc::band_crosses_critical: return ETSG_ERR_BAND_CROSSES_CRITICAL;
    case errc::empty_profile: return ETSG_ERR_EMPTY_PROFILE;
    case errc::small_kx: return ETSG_ERR_SMALL_KX;
    case errc::below_rest: return ETSG_ERR_BELOW_REST;
    case errc::numeric: return ETSG_ERR_NUMERIC;
  }
  return ETSG_ERR_NUMERIC;
}

template <typename Fn>
etsg_status guarded(Fn&& fn) {
  try {
    fn();
    return ETSG_OK;
  } catch (const etsg::error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return ETSG_ERR_NUMERIC;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return ETSG_ERR_NUMERIC;
  }
}

etsg::BlochVector tau_from(const double tau[3]) {
  return {tau[0], tau[1], tau[2]};
}

}  // namespace

struct etsg_model {
  etsg::BarrierConfig cfg;
};

extern "C" {

const char* etsg_status_str(etsg_status status) {
  switch (status) {
    case ETSG_OK: return "ok";
    case ETSG_ERR_NULL_POINTER: return "null pointer";
    case ETSG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ETSG_ERR_KLEIN_REGIME: return "Klein-paradox regime";
    case ETSG_ERR_GRAZING_INCIDENCE: return "grazing incidence";
    case ETSG_ERR_DEGENERATE_DIRECTION: return "degenerate direction";
    case ETSG_ERR_ZERO_MOMENTUM: return "zero momentum";
    case ETSG_ERR_EVANESCENT_CHANNEL: return "evanescent channel";
    case ETSG_ERR_OUT_OF_ANGULAR_RANGE: return "angle out of range";
    case ETSG_ERR_SINGULAR_MATCHING: return "singular matching system";
    case ETSG_ERR_ZERO_AMPLITUDE: return "zero amplitude";
    case ETSG_ERR_NON_REAL_CURRENT: return "non-real current";
    case ETSG_ERR_NORMAL_INCIDENCE_UNDEFINED:
      return "undefined at normal incidence";
    case ETSG_ERR_BRANCH_DISCONTINUITY: return "phase branch discontinuity";
    case ETSG_ERR_BAND_CROSSES_CRITICAL:
      return "spectral band crosses the critical angle";
    case ETSG_ERR_EMPTY_PROFILE: return "empty beam profile";
    case ETSG_ERR_SMALL_KX: return "kx too small for the slab expansion";
    case ETSG_ERR_BELOW_REST: return "energy at or below the rest energy";
    case ETSG_ERR_NUMERIC: return "numeric failure";
  }
  return "unknown status";
}

const char* etsg_last_error(void) { return t_last_error.c_str(); }

const char* etsg_version(void) { return "1.0.0"; }

etsg_status etsg_model_create(double energy, double barrier, double mass,
                              etsg_model** out) {
  if (!out) return ETSG_ERR_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    *out = new etsg_model{etsg::BarrierConfig(energy, barrier, mass)};
  });
}

void etsg_model_free(etsg_model* model) { delete model; }

etsg_status etsg_model_query(const etsg_model* model, etsg_model_info* out) {
  if (!model || !out) return ETSG_ERR_NULL_POINTER;
  return guarded([&] {
    out->refractive_index = etsg::refractive_index(model->cfg);
    const etsg::CriticalAngles cr = etsg::critical_angles(model->cfg);
    out->phi_cr1 = cr.phi_cr1;
    out->phi_cr2 = cr.phi_cr2;
    out->k_incident = model->cfg.k_incident();
  });
}

etsg_status etsg_eval_point(const etsg_model* model, double phi_in, double ky,
                            const double tau[3], etsg_point_result* out) {
  if (!model || !tau || !out) return ETSG_ERR_NULL_POINTER;
  return guarded([&] {
    const etsg::BarrierConfig& cfg = model->cfg;
    const etsg::BlochVector tv = tau_from(tau);
    const etsg::SpinState chi = etsg::chi_from_bloch(tv);
    const etsg::IncidentBeam beam = etsg::beam_from_angle(cfg, phi_in, chi, ky);
    const etsg::ScatteringAmplitudes amps = etsg::amplitudes_closed_form(beam);
    const etsg::Coefficients co = etsg::coefficients(amps, beam);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    out->phi_r = phi_in;
    out->a_re = amps.A.real(); out->a_im = amps.A.imag();
    out->b_re = amps.B.real(); out->b_im = amps.B.imag();
    out->c_re = amps.C.real(); out->c_im = amps.C.imag();
    out->d_re = amps.D.real(); out->d_im = amps.D.imag();
    out->r_coeff = co.R;
    out->t_coeff = co.T;
    out->evanescent = amps.channel.propagating ? 0 : 1;
    out->near_critical =
        etsg::near_critical(cfg, beam.k.ky, beam.k.kz) ? 1 : 0;
    out->kxp = amps.channel.propagating ? amps.channel.kxp : 0.0;
    out->q = amps.channel.propagating ? 0.0 : amps.channel.q;

    if (amps.channel.propagating) {
      out->phi_t = std::atan2(beam.k.kz, amps.channel.kxp);
      if (cfg.barrier == 0.0) {
        // no step, no reflected beam; the amplitude-normalized limit of the
        // shift formula is finite but applies to nothing
        out->dy_r = 0.0;
        out->dz_r = 0.0;
      } else {
        const etsg::ShiftVector rs =
            etsg::shift_reflected_vector(beam.k, tv, cfg);
        out->dy_r = rs.dy;
        out->dz_r = rs.dz;
      }
      const etsg::ShiftVector ts =
          etsg::shift_transmitted_vector(beam.k, tv, cfg);
      out->dy_t = ts.dy;
      out->dz_t = ts.dz;
    } else {
      // past the critical angle the stationary-phase shifts of this model
      // are out of range; rows report total reflection only
      out->phi_t = nan;
      out->dy_r = nan;
      out->dz_r = nan;
      out->dy_t = nan;
      out->dz_t = nan;
    }
  });
}

etsg_status etsg_shift_check_run(const etsg_model* model, double phi_in,
                                 const double tau[3], etsg_shift_check* out) {
  if (!model || !tau || !out) return ETSG_ERR_NULL_POINTER;
  return guarded([&] {
    const etsg::BarrierConfig& cfg = model->cfg;
    const etsg::BlochVector tv = tau_from(tau);
    const etsg::SpinState chi = etsg::chi_from_bloch(tv);
    const double kz0 = cfg.k_incident() * std::sin(phi_in);
    const etsg::IncidentBeam beam = etsg::beam_from_angle(cfg, phi_in, chi);
    const etsg::ScatteringAmplitudes amps = etsg::amplitudes_closed_form(beam);
    const etsg::BlochVector ybasis{0, 1, 0};

    const etsg::PhaseFn th_ra = [&](double kz) {
      return etsg::reflected_branch_phase(cfg, 0.0, kz, ybasis, chi);
    };
    const etsg::PhaseFn th_rb = [&](double kz) {
      return etsg::reflected_branch_phase(cfg, 0.0, kz, -ybasis, chi);
    };
    const double sra = etsg::fd_shift_oracle(th_ra, kz0, cfg.mass);
    const double srb = etsg::fd_shift_oracle(th_rb, kz0, cfg.mass);
    out->dz_r_fd = etsg::weighted_shift(
        etsg::basis_decompose(amps.A, amps.B, ybasis, chi), sra, srb);
    out->dz_r_analytic = etsg::shift_reflected_ky0(cfg, phi_in, tv.ty);
    const double rref = std::max(std::abs(out->dz_r_analytic), 1e-300);
    out->dz_r_rel_gap = std::abs(out->dz_r_fd - out->dz_r_analytic) / rref;

    const etsg::PhaseFn th_tc = [&](double kz) {
      return etsg::transmitted_branch_phase(cfg, 0.0, kz, ybasis, chi);
    };
    const etsg::PhaseFn th_td = [&](double kz) {
      return etsg::transmitted_branch_phase(cfg, 0.0, kz, -ybasis, chi);
    };
    const double stc = etsg::fd_shift_oracle(th_tc, kz0, cfg.mass);
    const double std_ = etsg::fd_shift_oracle(th_td, kz0, cfg.mass);
    out->dz_t_fd = etsg::weighted_shift(
        etsg::basis_decompose(amps.C, amps.D, ybasis, chi), stc, std_);
    out->dz_t_analytic = etsg::shift_transmitted_ky0(cfg, phi_in, tv.ty);
    const double tref = std::max(std::abs(out->dz_t_analytic), 1e-300);
    out->dz_t_rel_gap = std::abs(out->dz_t_fd - out->dz_t_analytic) / tref;
  });
}

etsg_status etsg_wavepacket_run(const etsg_model* model, double phi_in,
                                const double tau[3], double kz0_a,
                                etsg_wavepacket_result* out) {
  if (!model || !tau || !out) return ETSG_ERR_NULL_POINTER;
  return guarded([&] {
    const etsg::BarrierConfig& cfg = model->cfg;
    const etsg::BlochVector tv = tau_from(tau);
    const etsg::SpinState chi = etsg::chi_from_bloch(tv);
    const etsg::IncidentBeam beam = etsg::beam_from_angle(cfg, phi_in, chi);
    if (!(kz0_a > 0))
      etsg::fail(etsg::errc::invalid_argument,
                 "wavepacket: kz0*a must be positive");
    const double a = kz0_a / std::abs(beam.k.kz);
    const etsg::BeamProfile prof = etsg::reflected_profile(beam, a);
    out->measured = etsg::centroid_shift(prof, 0.0, cfg.mass);
    out->analytic = etsg::shift_reflected_ky0(cfg, phi_in, tv.ty);
    const double ref = std::max(std::abs(out->analytic), 1e-300);
    out->rel_err = std::abs(out->measured - out->analytic) / ref;
    out->reflected_fraction = prof.mass / (2.0 * a);
    const etsg::Coefficients co =
        etsg::coefficients(etsg::amplitudes_closed_form(beam), beam);
    out->r_coeff = co.R;
  });
}

etsg_status etsg_trajectory_run(double energy0, double mass, double field,
                                double x_max, long steps, const double tau[3],
                                etsg_trajectory_result* out) {
  if (!tau || !out) return ETSG_ERR_NULL_POINTER;
  return guarded([&] {
    const etsg::FieldConfig cfg(field, energy0, mass);
    const etsg::ShiftVector acc =
        etsg::propagate(cfg, x_max, steps, tau_from(tau));
    out->dy = acc.dy;
    out->dz = acc.dz;
    out->magnitude = std::hypot(acc.dy, acc.dz);
    out->energy_final = energy0 + field * x_max;
    out->closed_form =
        etsg::closed_form_trajectory(energy0, out->energy_final, mass);
    const double ref = std::max(out->closed_form, 1e-300);
    out->rel_gap = std::abs(out->magnitude - out->closed_form) / ref;
  });
}

etsg_status etsg_verify_run(int mutation, etsg_verify_cb callback, void* user,
                            int* n_failed) {
  return guarded([&] {
    const etsg::Mutation mut = mutation != 0 ? etsg::Mutation::kThetaASign
                                             : etsg::Mutation::kNone;
    const auto results = etsg::run_invariant_suite(mut);
    int failed = 0;
    for (const auto& r : results) {
      if (!r.pass) ++failed;
      if (callback &&
          callback(r.name.c_str(), r.pass ? 1 : 0, r.value, r.bound, user))
        break;
    }
    if (n_failed) *n_failed = failed;
  });
}

}  // extern "C"
