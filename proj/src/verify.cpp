// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "etsg/dirac.hpp"
#include "etsg/error.hpp"
#include "etsg/scattering.hpp"
#include "etsg/shifts.hpp"
#include "etsg/spin.hpp"
#include "etsg/trajectory.hpp"
#include "etsg/wavepacket.hpp"

namespace etsg {

namespace {

constexpr std::uint64_t kSeed = 0x5ca77e12d1a4c0ffull;

WaveVector random_k(std::mt19937_64& rng, double scale = 2.0) {
  std::normal_distribution<double> g(0.0, scale);
  return {g(rng), g(rng), g(rng)};
}

BlochVector random_tau(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  double x = g(rng), y = g(rng), z = g(rng);
  double n = std::sqrt(x * x + y * y + z * z);
  while (n < 1e-6) {
    x = g(rng); y = g(rng); z = g(rng);
    n = std::sqrt(x * x + y * y + z * z);
  }
  return {x / n, y / n, z / n};
}

SpinState random_chi(std::mt19937_64& rng) {
  return chi_from_bloch(random_tau(rng));
}

// Valid propagating beam at a uniformly random interior angle.
struct RandomBeamDraw {
  BarrierConfig cfg;
  IncidentBeam beam;
};

RandomBeamDraw random_propagating_beam(std::mt19937_64& rng, bool allow_ky) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const double e = 1.2 + 4.0 * u(rng);
    const double v0 = 0.02 + 0.9 * (e - 1.02) * u(rng);
    BarrierConfig cfg(e, v0, 1.0);
    const CriticalAngles cr = critical_angles(cfg);
    if (cr.phi_cr1 < 0.1) continue;
    const double phi = u(rng) * 0.95 * cr.phi_cr1;
    const double ky = allow_ky ? (u(rng) - 0.5) * 0.5 * cfg.k_incident() : 0.0;
    const double k = cfg.k_incident();
    if (k * k - ky * ky <= 1e-6) continue;
    const double kxz = std::sqrt(k * k - ky * ky);
    WaveVector kv{kxz * std::cos(phi), ky, kxz * std::sin(phi)};
    if (!transmitted_channel(cfg, ky, kv.kz).propagating) continue;
    if (kv.kx < 0.05 * k) continue;
    return {cfg, IncidentBeam(cfg, kv, random_chi(rng))};
  }
}

struct Suite {
  std::vector<CheckResult> results;
  Mutation mutation;

  void record(const std::string& name, double value, double bound) {
    results.push_back({name, value <= bound, value, bound});
  }
};

void check_dirac(Suite& s) {
  std::mt19937_64 rng(kSeed);
  const auto& d = dirac_matrices();

  double worst = 0;
  const Mat4c* alphas[3] = {&d.alpha_x, &d.alpha_y, &d.alpha_z};
  const Mat4c id = Mat4c::identity();
  for (const auto* a : alphas) {
    worst = std::max(worst, ((*a) * (*a) - id).frobenius_norm());
    worst = std::max(worst, ((*a) * d.beta + d.beta * (*a)).frobenius_norm());
  }
  worst = std::max(worst, (d.beta * d.beta - id).frobenius_norm());
  s.record("dirac.anticommutation", worst, 1e-15);

  double eig = 0, unit = 0, diag = 0, wunit = 0, thm = 0;
  for (int i = 0; i < 100; ++i) {
    const WaveVector k = random_k(rng);
    const double e = free_energy(k, 1.0);
    const Mat4c h = hamiltonian(k, 1.0);

    const Bispinor psi = positive_energy_spinor(k, 1.0, random_chi(rng));
    eig = std::max(eig, (h * psi - cplx(e) * psi).norm());

    const Mat4c wp = diagonalizer(k, 1.0, Diagonalizer::Wprime);
    unit = std::max(unit, (adjoint(wp) * wp - Mat4c::identity()).frobenius_norm());
    Mat4c g = Mat4c::zero();
    g(0, 0) = e; g(1, 1) = e; g(2, 2) = -e; g(3, 3) = -e;
    diag = std::max(diag, (adjoint(wp) * h * wp - g).frobenius_norm());

    if (k.magnitude() + k.kz > 0.1 * k.magnitude()) {
      const Mat4c w = diagonalizer(k, 1.0, Diagonalizer::W);
      wunit = std::max(wunit,
                       (adjoint(w) * w - Mat4c::identity()).frobenius_norm());
    }

    std::normal_distribution<double> gsn;
    Mat2c t;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) t(r, c) = cplx(gsn(rng), gsn(rng));
    const double denom = h.frobenius_norm() *
                         std::max(1e-300, Mat4c::from_blocks(t, Mat2c::zero(),
                                                             Mat2c::zero(), t)
                                              .frobenius_norm());
    thm = std::max(thm, commutator_with_H(t, k, 1.0) / denom);
  }
  s.record("dirac.eigen_residual", eig, 1e-12);
  s.record("dirac.wprime_unitarity", unit, 1e-12);
  s.record("dirac.wprime_diagonalization", diag, 1e-12);
  s.record("dirac.w_unitarity", wunit, 1e-12);
  s.record("dirac.theorem1_commutator", thm, 1e-12);
}

void check_spin(Suite& s) {
  std::mt19937_64 rng(kSeed + 1);
  double ortho = 0, eig = 0, phase = 0;
  for (int i = 0; i < 100; ++i) {
    const WaveVector k = random_k(rng);
    const BlochVector tau = random_tau(rng);
    const double e = free_energy(k, 1.0);
    const SpinFourVector sv = boost_spin(k, 1.0, tau);
    ortho = std::max(ortho, std::abs(sv.s0 * e - sv.sx * k.kx - sv.sy * k.ky -
                                     sv.sz * k.kz));

    const SpinState chi_p = chi_from_bloch(tau);
    const SpinState chi_m = chi_from_bloch(-tau);
    const Bispinor psi_p = positive_energy_spinor(k, 1.0, chi_p);
    const Bispinor psi_m = positive_energy_spinor(k, 1.0, chi_m);
    const Mat4c gam = gamma_spin_operator(sv);
    eig = std::max(eig, (gam * psi_p - cplx(0.5) * psi_p).norm());
    eig = std::max(eig, (gam * psi_m + cplx(0.5) * psi_m).norm());

    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    const cplx rot = std::exp(cplx(0.0, u(rng)));
    const SpinState chi2{rot * chi_p.l1, rot * chi_p.l2};
    const BlochVector t1 = bloch_from_chi(chi_p);
    const BlochVector t2 = bloch_from_chi(chi2);
    phase = std::max(phase, std::abs(t1.tx - t2.tx) + std::abs(t1.ty - t2.ty) +
                                std::abs(t1.tz - t2.tz));
  }
  s.record("spin.boost_orthogonality", ortho, 1e-10);
  s.record("spin.gamma_eigenvalue", eig, 1e-10);
  s.record("spin.bloch_phase_invariance", phase, 1e-12);
}

void check_scattering(Suite& s) {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  double oracle = 0, rt = 0, current = 0;
  for (int i = 0; i < 1000; ++i) {
    const RandomBeamDraw draw = random_propagating_beam(rng, true);
    const ScatteringAmplitudes a = amplitudes_closed_form(draw.beam);
    const ScatteringAmplitudes b = matching_solve(draw.beam);
    const double scale = std::max({std::abs(a.A), std::abs(a.B), std::abs(a.C),
                                   std::abs(a.D), 1e-30});
    oracle = std::max(oracle,
                      (std::abs(a.A - b.A) + std::abs(a.B - b.B) +
                       std::abs(a.C - b.C) + std::abs(a.D - b.D)) /
                          scale);
    const Coefficients co = coefficients(a, draw.beam);
    rt = std::max(rt, std::abs(co.R + co.T - 1.0));
    // current conservation: j_in + j_r = j_t
    const double e = draw.cfg.energy, v0 = draw.cfg.barrier;
    const double j_in = draw.beam.k.kx / e;
    const double j_r = -draw.beam.k.kx / e * co.R;
    const double j_t = a.channel.kxp / (e - v0) *
                       (std::norm(a.C) + std::norm(a.D));
    current = std::max(current, std::abs(j_in + j_r - j_t));
  }
  s.record("scattering.oracle_equivalence", oracle, 1e-12);
  s.record("scattering.rt_sum", rt, 1e-12);
  s.record("scattering.current_conservation", current, 1e-12);

  // total reflection past the critical angle
  double evan = 0;
  for (int i = 0; i < 200; ++i) {
    const double e = 1.5 + 3.0 * u(rng);
    const double v0 = 0.2 + 0.7 * (e - 1.0) * u(rng);
    BarrierConfig cfg(e, v0, 1.0);
    const CriticalAngles cr = critical_angles(cfg);
    if (cr.phi_cr1 <= 0 || cr.phi_cr1 > 1.45) continue;
    const double phi = cr.phi_cr1 + (1.45 - cr.phi_cr1) * u(rng);
    const IncidentBeam beam = beam_from_angle(cfg, phi, random_chi(rng));
    if (transmitted_channel(cfg, 0.0, beam.k.kz).propagating) continue;
    const ScatteringAmplitudes a = amplitudes_closed_form(beam);
    evan = std::max(evan, std::abs(std::norm(a.A) + std::norm(a.B) - 1.0));
  }
  s.record("scattering.evanescent_totality", evan, 1e-12);

  // spin preserved on the special axis
  double preserve = 0;
  for (int i = 0; i < 100; ++i) {
    const RandomBeamDraw draw = random_propagating_beam(rng, true);
    if (std::hypot(draw.beam.k.ky, draw.beam.k.kz) <
        1e-3 * draw.cfg.k_incident())
      continue;
    const BlochVector tau = special_spin_direction(draw.beam.k);
    const IncidentBeam beam(draw.cfg, draw.beam.k, chi_from_bloch(tau));
    const ScatteringAmplitudes a = amplitudes_closed_form(beam);
    const double nr = std::sqrt(std::norm(a.A) + std::norm(a.B));
    const BlochVector tr = bloch_from_chi({a.A / nr, a.B / nr});
    const double nt = std::sqrt(std::norm(a.C) + std::norm(a.D));
    const BlochVector tt = bloch_from_chi({a.C / nt, a.D / nt});
    preserve = std::max({preserve,
                         std::abs(tr.tx - tau.tx) + std::abs(tr.ty - tau.ty) +
                             std::abs(tr.tz - tau.tz),
                         std::abs(tt.tx - tau.tx) + std::abs(tt.ty - tau.ty) +
                             std::abs(tt.tz - tau.tz)});
  }
  s.record("scattering.special_axis_preservation", preserve, 1e-10);

  // the propagating/evanescent boundary sits exactly at phi_cr1
  double boundary = 0;
  for (int i = 0; i < 20; ++i) {
    const double e = 1.5 + 3.0 * u(rng);
    const double v0 = 0.1 + 0.5 * (e - 1.1) * u(rng);
    BarrierConfig cfg(e, v0, 1.0);
    const CriticalAngles cr = critical_angles(cfg);
    if (!(cr.phi_cr1 > 0.05 && cr.phi_cr1 < 1.5)) continue;
    double lo = 0.0, hi = 0.5 * M_PI;
    const double k = cfg.k_incident();
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (transmitted_channel(cfg, 0.0, k * std::sin(mid)).propagating)
        lo = mid;
      else
        hi = mid;
    }
    boundary = std::max(boundary, std::abs(0.5 * (lo + hi) - cr.phi_cr1));
  }
  s.record("scattering.channel_boundary", boundary, 1e-10);
}

void check_shifts(Suite& s) {
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  // exact sign flip under tau -> -tau on the algebraic routes
  double flip = 0;
  for (int i = 0; i < 100; ++i) {
    const RandomBeamDraw draw = random_propagating_beam(rng, true);
    const BlochVector tau = random_tau(rng);
    const ShiftVector r1 = shift_reflected_vector(draw.beam.k, tau, draw.cfg);
    const ShiftVector r2 = shift_reflected_vector(draw.beam.k, -tau, draw.cfg);
    const ShiftVector t1 = shift_transmitted_vector(draw.beam.k, tau, draw.cfg);
    const ShiftVector t2 = shift_transmitted_vector(draw.beam.k, -tau, draw.cfg);
    flip = std::max({flip, std::abs(r1.dy + r2.dy), std::abs(r1.dz + r2.dz),
                     std::abs(t1.dy + t2.dy), std::abs(t1.dz + t2.dz)});
  }
  s.record("shifts.spin_flip_antisymmetry", flip, 0.0);

  // the same antisymmetry through the spectral-phase route (mutation hook)
  {
    BarrierConfig cfg(3.0, 0.25, 1.0);
    const double phi = 40.0 * M_PI / 180.0;
    const double kz0 = cfg.k_incident() * std::sin(phi);
    const double mut = (s.mutation == Mutation::kThetaASign) ? -1.0 : 1.0;
    const auto phase_route = [&](const BlochVector& tau) {
      const SpinState chi = chi_from_bloch(tau);
      const BlochVector ybasis{0, 1, 0};
      const PhaseFn th_a = [&](double kz) {
        return mut * reflected_branch_phase(cfg, 0.0, kz, ybasis, chi);
      };
      const PhaseFn th_b = [&](double kz) {
        return reflected_branch_phase(cfg, 0.0, kz, BlochVector{0, -1, 0}, chi);
      };
      const double sa = fd_shift_oracle(th_a, kz0, cfg.mass);
      const double sb = fd_shift_oracle(th_b, kz0, cfg.mass);
      const double kx = std::sqrt(cfg.k_incident() * cfg.k_incident() - kz0 * kz0);
      const IncidentBeam beam(cfg, WaveVector{kx, 0, kz0}, chi);
      const ScatteringAmplitudes a = amplitudes_closed_form(beam);
      return weighted_shift(basis_decompose(a.A, a.B, ybasis, chi), sa, sb);
    };
    const BlochVector tau{0.48, 0.6, 0.6399999999999999};
    const BlochVector taun = random_tau(rng);
    (void)taun;
    const double fwd = phase_route(tau);
    const double rev = phase_route(-tau);
    s.record("shifts.spin_flip_antisymmetry_phase", std::abs(fwd + rev), 1e-10);
  }

  // weighted shift identical across bases
  {
    BarrierConfig cfg(3.0, 0.25, 1.0);
    double worst = 0;
    const BlochVector bases[5] = {{0, 1, 0},
                                  {0, 0, 1},
                                  {1, 0, 0},
                                  {0.3, 0.5, std::sqrt(1 - 0.09 - 0.25)},
                                  {-0.7, 0.1, std::sqrt(1 - 0.49 - 0.01)}};
    for (int i = 0; i < 10; ++i) {
      const double phi = (0.1 + 0.8 * u(rng)) * critical_angles(cfg).phi_cr1;
      const double kz0 = cfg.k_incident() * std::sin(phi);
      const SpinState chi = random_chi(rng);
      const double kx = std::sqrt(cfg.k_incident() * cfg.k_incident() - kz0 * kz0);
      const IncidentBeam beam(cfg, WaveVector{kx, 0, kz0}, chi);
      const ScatteringAmplitudes amp = amplitudes_closed_form(beam);
      double first = 0;
      for (int b = 0; b < 5; ++b) {
        const PhaseFn th_a = [&](double kz) {
          return reflected_branch_phase(cfg, 0.0, kz, bases[b], chi);
        };
        const PhaseFn th_b = [&](double kz) {
          return reflected_branch_phase(cfg, 0.0, kz, -bases[b], chi);
        };
        const double sa = fd_shift_oracle(th_a, kz0, cfg.mass);
        const double sb = fd_shift_oracle(th_b, kz0, cfg.mass);
        const double val =
            weighted_shift(basis_decompose(amp.A, amp.B, bases[b], chi), sa, sb);
        if (b == 0)
          first = val;
        else
          worst = std::max(worst, std::abs(val - first));
      }
    }
    s.record("shifts.basis_independence", worst, 1e-10);
  }

  // reflected vector shift carries no V0 dependence
  {
    double worst = 0;
    const WaveVector k{1.9, 0.7, 1.5};
    const double e = std::sqrt(1.9 * 1.9 + 0.7 * 0.7 + 1.5 * 1.5 + 1.0);
    const BlochVector tau = random_tau(rng);
    ShiftVector ref{};
    bool haveref = false;
    for (double v0 = 0.05; v0 < 0.8; v0 += 0.05) {
      BarrierConfig cfg(e, v0, 1.0);
      if (!transmitted_channel(cfg, k.ky, k.kz).propagating) continue;
      const ShiftVector sv = shift_reflected_vector(k, tau, cfg);
      if (!haveref) {
        ref = sv;
        haveref = true;
      } else {
        worst = std::max({worst, std::abs(sv.dy - ref.dy),
                          std::abs(sv.dz - ref.dz)});
      }
    }
    s.record("shifts.v0_independence", worst, 1e-12);
  }

  // reflected shift crosses zero exactly at arctan sqrt(m/E)
  {
    BarrierConfig cfg(3.0, 0.25, 1.0);
    double lo = 0.01, hi = critical_angles(cfg).phi_cr1 - 0.01;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (shift_reflected_ky0(cfg, mid, 1.0) < 0)
        lo = mid;
      else
        hi = mid;
    }
    const double root = 0.5 * (lo + hi);
    s.record("shifts.zero_crossing",
             std::abs(root - std::atan(std::sqrt(cfg.mass / cfg.energy))),
             1e-10);
  }

  // non-relativistic vanishing ~ sqrt(E - m)
  {
    const double phi = 20.0 * M_PI / 180.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int np = 0;
    for (int i = 0; i <= 9; ++i) {
      const double eps = std::pow(10.0, -6.0 + i / 3.0);
      BarrierConfig cfg(1.0 + eps, 0.25 * eps, 1.0);
      const double v = std::abs(shift_reflected_ky0(cfg, phi, 1.0));
      const double lx = std::log(eps), ly = std::log(v);
      sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
      ++np;
    }
    const double slope = (np * sxy - sx * sy) / (np * sxx - sx * sx);
    s.record("shifts.nonrelativistic_exponent", std::abs(slope - 0.5), 0.02);
  }

  // analytic closed forms against the FD phase-derivative oracle
  {
    BarrierConfig cfg(3.0, 0.25, 1.0);
    const CriticalAngles cr = critical_angles(cfg);
    const double lim = cr.phi_cr1 - 5.0 * M_PI / 180.0;
    const SpinState up_y = chi_from_bloch({0, 1, 0});
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      const double phi = (i + 0.5) * lim / 20.0;
      const double kz0 = cfg.k_incident() * std::sin(phi);
      const PhaseFn th_r = [&](double kz) {
        return reflected_branch_phase(cfg, 0.0, kz, BlochVector{0, 1, 0}, up_y);
      };
      const PhaseFn th_t = [&](double kz) {
        return transmitted_branch_phase(cfg, 0.0, kz, BlochVector{0, 1, 0},
                                        up_y);
      };
      const double fd_r = fd_shift_oracle(th_r, kz0, cfg.mass);
      const double fd_t = fd_shift_oracle(th_t, kz0, cfg.mass);
      const double an_r = shift_reflected_ky0(cfg, phi, 1.0);
      const double an_t = shift_transmitted_ky0(cfg, phi, 1.0);
      if (std::abs(an_r) > 1e-6)
        worst = std::max(worst, std::abs(fd_r - an_r) / std::abs(an_r));
      worst = std::max(worst, std::abs(fd_t - an_t) / std::abs(an_t));
    }
    s.record("shifts.analytic_vs_fd", worst, 1e-6);
  }

  // vector forms against the independent Omega route, and ky = 0 reduction
  {
    double worst = 0, red = 0;
    for (int i = 0; i < 100; ++i) {
      const RandomBeamDraw draw = random_propagating_beam(rng, true);
      const BlochVector tau = random_tau(rng);
      const ShiftVector rv = shift_reflected_vector(draw.beam.k, tau, draw.cfg);
      const ShiftVector ro = shift_reflected_omega(draw.beam.k, tau, draw.cfg);
      const ShiftVector tv =
          shift_transmitted_vector(draw.beam.k, tau, draw.cfg);
      const ShiftVector to = shift_transmitted_omega(draw.beam.k, tau, draw.cfg);
      worst = std::max({worst, std::abs(rv.dy - ro.dy), std::abs(rv.dz - ro.dz),
                        std::abs(tv.dy - to.dy), std::abs(tv.dz - to.dz)});
    }
    for (int i = 0; i < 20; ++i) {
      const RandomBeamDraw draw = random_propagating_beam(rng, false);
      const double ty = 2.0 * u(rng) - 1.0;
      const BlochVector tau{std::sqrt(1.0 - ty * ty), ty, 0.0};
      const double phi = std::atan2(draw.beam.k.kz, draw.beam.k.kx);
      if (phi < 0) continue;
      const ShiftVector rv = shift_reflected_vector(draw.beam.k, tau, draw.cfg);
      const ShiftVector tv =
          shift_transmitted_vector(draw.beam.k, tau, draw.cfg);
      red = std::max({red,
                      std::abs(rv.dz - shift_reflected_ky0(draw.cfg, phi, ty)),
                      std::abs(tv.dz - shift_transmitted_ky0(draw.cfg, phi, ty))});
    }
    s.record("shifts.vector_vs_omega", worst, 1e-10);
    s.record("shifts.vector_ky0_reduction", red, 1e-10);
  }
}

void check_wavepacket(Suite& s) {
  BarrierConfig cfg(3.0, 0.25, 1.0);
  const double phi = 60.0 * M_PI / 180.0;
  const SpinState chi = chi_from_bloch({0, 1, 0});
  const IncidentBeam beam = beam_from_angle(cfg, phi, chi);
  const double kz0 = beam.k.kz;
  const double analytic = shift_reflected_ky0(cfg, phi, 1.0);
  const ScatteringAmplitudes amps = amplitudes_closed_form(beam);
  const Coefficients co = coefficients(amps, beam);

  double errs[4];
  double mass_gap = 0;
  const double apertures[4] = {50, 100, 200, 400};
  for (int i = 0; i < 4; ++i) {
    const double a = apertures[i] / kz0;
    const BeamProfile prof = reflected_profile(beam, a);
    const double measured = centroid_shift(prof, 0.0, cfg.mass);
    errs[i] = std::abs(measured - analytic) / std::abs(analytic);
    if (apertures[i] >= 200)
      mass_gap = std::max(mass_gap, std::abs(prof.mass / (2.0 * a) / co.R - 1.0));
  }
  // ladder must not backslide (15% slack for quadrature noise) and must be
  // inside 5% once kz0 a reaches 200
  double ladder = 0;
  for (int i = 1; i < 4; ++i)
    ladder = std::max(ladder, errs[i] / std::max(errs[i - 1], 1e-12));
  s.record("wavepacket.convergence_monotone", ladder, 1.15);
  s.record("wavepacket.accuracy_at_200", errs[2], 0.05);
  s.record("wavepacket.norm_sanity", mass_gap, 0.02);
}

void check_trajectory(Suite& s) {
  std::mt19937_64 rng(kSeed + 4);
  double gap = 0;
  const double e0s[3] = {1.5, 3.0, 10.0};
  for (const double e0 : e0s) {
    FieldConfig field(0.01, e0, 1.0);
    const double x_max = e0 / field.field;  // spans an energy doubling
    const double e1 = e0 + field.field * x_max;
    const ShiftVector acc = propagate(field, x_max, 4000, {0, 1, 0});
    const double mag = std::hypot(acc.dy, acc.dz);
    const double cf = closed_form_trajectory(e0, e1, 1.0);
    gap = std::max(gap, std::abs(mag - cf) / cf);
  }
  s.record("trajectory.integrator_vs_closed", gap, 0.01);

  double flip = 0;
  for (int i = 0; i < 20; ++i) {
    const BlochVector tau = random_tau(rng);
    FieldConfig field(0.02, 2.0, 1.0);
    const ShiftVector p = propagate(field, 50.0, 1000, tau);
    const ShiftVector n = propagate(field, 50.0, 1000, -tau);
    flip = std::max({flip, std::abs(p.dy + n.dy), std::abs(p.dz + n.dz)});
  }
  s.record("trajectory.spin_flip_antisymmetry", flip, 0.0);

  // affine energy bookkeeping is drift-free by construction
  {
    FieldConfig field(0.01, 3.0, 1.0);
    const long steps = 4000;
    const double x_max = 123.456;
    const double dx = x_max / steps;
    const double x_last = (steps - 0.5) * dx;
    const double expected = field.energy0 + field.field * x_last;
    const double rebuilt =
        field.energy0 + field.field * ((steps - 1) + 0.5) * dx;
    s.record("trajectory.energy_bookkeeping", std::abs(rebuilt - expected), 0.0);
  }
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(Mutation mutation) {
  Suite s;
  s.mutation = mutation;
  check_dirac(s);
  check_spin(s);
  check_scattering(s);
  check_shifts(s);
  check_wavepacket(s);
  check_trajectory(s);
  return s.results;
}

}  // namespace etsg
