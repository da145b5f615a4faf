#pragma once

#include <complex>

namespace sqz {

// Two-component transverse optical field envelope:
//   Ex = amp_x * exp(i rel_phase),  Ey = amp_y,
// with real amplitudes >= 0. rel_phase is the phase of the x component
// relative to y, kept in (-pi, pi]. Positive ellipticity corresponds to
// sin(rel_phase) > 0.
struct FieldEnvelope {
  double amp_x = 0.0;
  double amp_y = 0.0;
  double rel_phase = 0.0;  // rad
  double frequency = 0.0;  // rad/s (optical carrier; 0 ok for unit-free work)

  std::complex<double> ex() const;
  std::complex<double> ey() const { return amp_y; }
  double wavenumber() const;  // 1/m, frequency/c
};

// Polarization ellipse: ellipticity in [-pi/4, pi/4], principal-axis angle
// in (-pi/2, pi/2].
struct PolarizationState {
  double ellipticity = 0.0;
  double rotation_angle = 0.0;
};

struct Stokes {
  double s0, s1, s2, s3;
};

double reduce_phase(double phi);       // to (-pi, pi]
double reduce_axis_angle(double phi);  // to (-pi/2, pi/2]

// Exact ellipticity, (1/2) arcsin of the circular-intensity imbalance
// 2 ax ay sin(rel_phase) / (ax^2 + ay^2). Throws std::domain_error on zero
// total intensity.
double ellipticity_exact(const FieldEnvelope& f);

// Weak-x limit (ax/ay) sin(rel_phase). Intended for ax/ay < 0.1.
double ellipticity_small(const FieldEnvelope& f);

// First-order self-rotation transfer over one slab: the near-identity 2x2 map
// with rotation angle g * eps(0) * length, where eps(0) is the small-signal
// input ellipticity. Not an exact rotation by construction.
FieldEnvelope propagate_sr(const FieldEnvelope& f, double g, double length);

// True when the linearized propagate_sr map is trustworthy (< 0.3 rad).
bool sr_small_angle_ok(const FieldEnvelope& f, double g, double length);

// S0..S3 from the envelope components; S3 = -2 ax ay sin(rel_phase), so
// positive ellipticity means S3 < 0 in this sign convention.
Stokes stokes_parameters(const FieldEnvelope& f);

}  // namespace sqz
