#include "sqz/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sqz {

namespace {
constexpr double pi = std::numbers::pi;
}

std::complex<double> FieldEnvelope::ex() const {
  return std::polar(amp_x, rel_phase);
}

double FieldEnvelope::wavenumber() const { return frequency / 2.99792458e8; }

double reduce_phase(double phi) {
  double r = std::remainder(phi, 2.0 * pi);  // (-pi, pi], remainder gives [-pi, pi]
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

double reduce_axis_angle(double phi) {
  double r = std::remainder(phi, pi);
  if (r <= -pi / 2.0) r += pi;
  return r;
}

double ellipticity_exact(const FieldEnvelope& f) {
  double i0 = f.amp_x * f.amp_x + f.amp_y * f.amp_y;
  if (i0 <= 0.0) throw std::domain_error("ellipticity_exact: zero intensity");
  double arg = 2.0 * f.amp_x * f.amp_y * std::sin(f.rel_phase) / i0;
  // |arg| <= 1 by AM-GM; clamp anyway against rounding at circular pol.
  arg = std::clamp(arg, -1.0, 1.0);
  return 0.5 * std::asin(arg);
}

double ellipticity_small(const FieldEnvelope& f) {
  if (f.amp_y == 0.0) throw std::domain_error("ellipticity_small: amp_y = 0");
  return f.amp_x / f.amp_y * std::sin(f.rel_phase);
}

FieldEnvelope propagate_sr(const FieldEnvelope& f, double g, double length) {
  // First-order map: Ex' = Ex + (g l eps0) Ey, Ey' = Ey - (g l eps0) Ex,
  // with eps0 the small-signal input ellipticity. Exact for the regime the
  // linearized squeezing algebra lives in; not unitary at O((g l eps0)^2).
  double eps0 = ellipticity_small(f);
  double rot = g * length * eps0;
  std::complex<double> ex = f.ex() + rot * f.ey();
  std::complex<double> ey = f.ey() - rot * f.ex();
  FieldEnvelope out;
  out.amp_x = std::abs(ex);
  out.amp_y = std::abs(ey);
  out.rel_phase = reduce_phase(std::arg(ex) - std::arg(ey));
  out.frequency = f.frequency;
  return out;
}

bool sr_small_angle_ok(const FieldEnvelope& f, double g, double length) {
  return std::abs(g * length * ellipticity_small(f)) < 0.3;
}

Stokes stokes_parameters(const FieldEnvelope& f) {
  std::complex<double> ex = f.ex(), ey = f.ey();
  double s0 = std::norm(ex) + std::norm(ey);
  double s1 = std::norm(ex) - std::norm(ey);
  std::complex<double> cross = ex * std::conj(ey);
  double s2 = 2.0 * cross.real();
  // S3 = i(Ex+ Ey- - Ex- Ey+) = -2 Im(Ex Ey*) = -2 ax ay sin(rel_phase):
  // positive ellipticity (sin rel_phase > 0) maps to S3 < 0 here.
  double s3 = -2.0 * cross.imag();
  return {s0, s1, s2, s3};
}

}  // namespace sqz
