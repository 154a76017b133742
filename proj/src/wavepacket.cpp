// Copyright 2025 the etsg developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include "etsg/wavepacket.hpp"

#include <algorithm>
#include <cmath>

#include "etsg/error.hpp"
#include "etsg/shifts.hpp"
#include "etsg/spin.hpp"

namespace etsg {

double spectrum_F(double kz, double kz0, double a) {
  if (!(a > 0)) fail(errc::invalid_argument, "spectrum_F: aperture must be positive");
  const double d = kz0 - kz;
  const double c = std::sqrt(2.0 / M_PI);
  if (std::abs(d * a) < 1e-8) {
    const double x = d * a;
    return c * a * (1.0 - x * x / 6.0);  // sinc series at the peak
  }
  return c * std::sin(d * a) / d;
}

namespace {

struct Kahan {
  double sum = 0, carry = 0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

BeamProfile reflected_profile(const IncidentBeam& beam, double a,
                              const SamplingSpec& spec) {
  if (!(a > 0))
    fail(errc::invalid_argument, "reflected_profile: aperture must be positive");
  if (spec.quadrature_nodes < 2 || spec.grid_points < 2)
    fail(errc::invalid_argument, "reflected_profile: degenerate sampling spec");
  const BarrierConfig& cfg = beam.config;
  if (std::abs(beam.k.ky) > 1e-12 * cfg.k_incident())
    fail(errc::invalid_argument, "reflected_profile: ky = 0 required");

  const double k = cfg.k_incident();
  const double kz0 = beam.k.kz;
  const CriticalAngles cr = critical_angles(cfg);
  const double kcr = k * std::sin(cr.phi_cr1);
  // Stationary phase needs at least half the sinc main lobe inside the
  // propagating window below the critical angle.
  const double avail = kcr - std::abs(kz0);
  if (avail < 0.5 * M_PI / a)
    fail(errc::band_crosses_critical,
         "reflected_profile: spectral band touches the critical angle");
  double half = spec.band_halfwidth > 0 ? spec.band_halfwidth : 40.0 * M_PI / a;
  half = std::min(half, 0.999 * avail);

  const int nk = spec.quadrature_nodes;
  const int nz = spec.grid_points;
  const double lo = kz0 - half;
  const double w = 2.0 * half / nk;

  // spectral weights: full complex amplitudes, spinors frozen at the carrier
  const SpinState chi_up = chi_from_bloch({0, 1, 0});
  const SpinState chi_dn = chi_from_bloch({0, -1, 0});
  const WaveVector kr0{-beam.k.kx, 0.0, kz0};
  const Bispinor u_a = positive_energy_spinor(kr0, cfg.mass, chi_up);
  const Bispinor u_b = positive_energy_spinor(kr0, cfg.mass, chi_dn);

  std::vector<double> kzs(nk);
  std::vector<cplx> ga(nk), gb(nk);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double fourier_nrm = 1.0 / std::sqrt(2.0 * M_PI);
  for (int j = 0; j < nk; ++j) {
    const double kz = lo + (j + 0.5) * w;
    kzs[j] = kz;
    const double kx = std::sqrt(k * k - kz * kz);
    const IncidentBeam comp(cfg, WaveVector{kx, 0.0, kz}, beam.chi);
    const ScatteringAmplitudes amps = amplitudes_closed_form(comp);
    const cplx ap = (amps.A - cplx(0, 1) * amps.B) * inv_sqrt2;
    const cplx bp = (amps.A + cplx(0, 1) * amps.B) * inv_sqrt2;
    const double f = spectrum_F(kz, kz0, a) * w * fourier_nrm;
    ga[j] = ap * f;
    gb[j] = bp * f;
  }

  BeamProfile out;
  out.z_grid.resize(nz);
  out.intensity.resize(nz);
  const double z_lo = -4.0 * a;
  const double dz = 8.0 * a / (nz - 1);
  Kahan zsum, isum;
  for (int iz = 0; iz < nz; ++iz) {
    const double z = z_lo + iz * dz;
    out.z_grid[iz] = z;
    // phasor recurrence over the uniform kz grid
    const cplx rot = std::exp(cplx(0, w * z));
    cplx ph = std::exp(cplx(0, kzs[0] * z));
    Kahan re_a, im_a, re_b, im_b;
    for (int j = 0; j < nk; ++j) {
      const cplx ca = ga[j] * ph;
      const cplx cb = gb[j] * ph;
      re_a.add(ca.real());
      im_a.add(ca.imag());
      re_b.add(cb.real());
      im_b.add(cb.imag());
      ph *= rot;
    }
    const cplx amp_a(re_a.sum, im_a.sum);
    const cplx amp_b(re_b.sum, im_b.sum);
    double inten = 0;
    for (int c = 0; c < 4; ++c)
      inten += std::norm(amp_a * u_a[c] + amp_b * u_b[c]);
    out.intensity[iz] = inten;
    zsum.add(z * inten);
    isum.add(inten);
  }
  if (!(isum.sum > 0))
    fail(errc::empty_profile, "reflected_profile: zero total intensity");
  out.centroid = zsum.sum / isum.sum;
  out.mass = isum.sum * dz;
  return out;
}

double centroid_shift(const BeamProfile& profile, double reference,
                      double mass) {
  if (profile.intensity.empty() || !(profile.mass > 0))
    fail(errc::empty_profile, "centroid_shift: empty profile");
  return (profile.centroid - reference) * mass / (2.0 * M_PI);
}

}  // namespace etsg
