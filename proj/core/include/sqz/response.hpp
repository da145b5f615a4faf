#pragma once

#include "sqz/liouville.hpp"
#include "sqz/scheme.hpp"

namespace sqz {

// Per-length optical response extracted from the steady state. 1/cm when the
// propagation scale K is in (rad/s)/cm.
struct DMResponse {
  double alpha = 0.0;    // intensity absorption coefficient
  double g = 0.0;        // rotation rate per unit ellipticity
  double dphi_dz = 0.0;  // overall phase shift rate
  double se_rate = 0.0;  // ellipticity change rate per unit ellipticity
  bool probe_converged = true;
};

// Raw envelope derivatives at the drive's own ellipticity:
// d/dz of (E0/E0, phase, axis angle, ellipticity).
struct EnvelopeDerivs {
  double dlogE0 = 0.0;
  double dphi = 0.0;
  double dtheta = 0.0;
  double deps = 0.0;
};

// Propagation scale K = (3/8pi) n lambda^2 gamma0, (rad/s)/cm for lambda in
// cm and n in cm^-3; valid when the coupling element is radiatively tied to
// gamma0.
double response_scale(double density_cm3, double wavelength_cm, double gamma0);

// Single steady-state solve + polarization projection onto the ellipse
// parametrization. Uses the drive exactly as given.
EnvelopeDerivs envelope_derivatives(const LevelScheme& scheme,
                                    const DriveSpec& drive, double K);

// Small-probe SR extraction: solves at eps_probe and eps_probe/2, takes
// g = dtheta/dz / eps and se_rate = deps/dz / eps from the finer probe, and
// reports probe_converged = (relative change in g < 1%). alpha = -2 dlogE0/dz.
// The drive's own ellipticity is ignored; pol_angle/phase are honored.
DMResponse extract_response(const LevelScheme& scheme, const DriveSpec& drive,
                            double K, double eps_probe = 1e-3);

}  // namespace sqz
