#pragma once

#include <string>
#include <vector>

namespace sqz {

enum class TransitionKind { x_half_half, half_threehalves };

// Closed fine-structure transition in a vapor. Lengths in cm, density in
// cm^-3, rates in rad/s. dipole is the reduced matrix element <Je||d||Jg> in
// C m; the per-component coupling element is dipole/sqrt(2Je+1).
struct TransitionSpec {
  TransitionKind system = TransitionKind::x_half_half;
  double gamma = 0.0;       // ground depolarization, rad/s
  double gamma0 = 0.0;      // excited decay, rad/s
  double wavelength = 0.0;  // cm
  double density = 0.0;     // cm^-3
  double Jg = 0.5;
  double Je = 0.5;
  double dipole = 0.0;      // C m (reduced element)
};

struct SaturationPoint {
  double kappa = 0.0;     // saturation parameter, >= 0
  double detuning = 0.0;  // Delta/gamma0 (dimensionless)
};

// Per-length response. g is rotation rate per unit input ellipticity,
// se_rate the ellipticity change rate per unit input ellipticity. 1/cm.
struct MediumResponse {
  double alpha = 0.0;
  double g = 0.0;
  double se_rate = 0.0;
  double alpha0 = 0.0;
};

// Non-fatal regime complaints (gamma/gamma0 too large, etc).
std::vector<std::string> validate(const TransitionSpec& spec);

// kappa = (d E0 / hbar)^2 / (gamma gamma0), d the reduced element.
// field_amplitude in V/m. Throws std::domain_error on zero rates.
double saturation_kappa(const TransitionSpec& spec, double field_amplitude);

// Unsaturated on-resonance absorption coefficient
// alpha0 = (n/2pi) lambda^2 (2Je+1)/(2Jg+1), 1/cm.
double unsaturated_alpha0(const TransitionSpec& spec);

// Closed-form steady-state response of the two systems:
//   X (1/2 -> 1/2):
//     alpha = alpha0 / (1 + 4 D^2 + (gamma/gamma0) kappa/3)
//     g     = (2/9) alpha kappa D / (1 + 4 D^2 + kappa/9)
//     se    = g / D, continued evenly through D = 0
//   W (1/2 -> 3/2): same alpha saturation, and
//     g     = -(1/18) alpha kappa D / (1 + 4 D^2 + kappa/18)
//     se    = g / (2 D), same even continuation
// with D = detuning in gamma0 units. The W rotation genuinely carries the
// opposite sign. The se forms are conservative estimates used only to bound
// the loss it causes; the exact steady state ties elliptization to rotation
// through the shared Lorentzian, se = g / (2 D), for both systems.
MediumResponse response_x(const TransitionSpec& spec, const SaturationPoint& pt);
MediumResponse response_w(const TransitionSpec& spec, const SaturationPoint& pt);
MediumResponse response(const TransitionSpec& spec, const SaturationPoint& pt);

// Length/phase-optimized squeeze factor at one saturation point, evaluated
// from |g|/alpha of the closed-form response. Negative detunings use |D|.
double squeezing_profile(const TransitionSpec& spec, const SaturationPoint& pt);

// Detuning maximizing the squeeze factor: X: (1/2) sqrt(1 + kappa/9);
// W: (1/2) sqrt(1 + kappa/18). In gamma0 units.
double optimal_detuning(TransitionKind system, double kappa);

// Large-kappa optimum: X: (kappa/972)^{1/6}; W: (kappa/7776)^{1/6}.
double asymptotic_squeezing(TransitionKind system, double kappa);

// Optimal unsaturated optical depth alpha0*l = (4 sqrt(2) kappa / 9)^{2/3}.
double optimal_thickness(double kappa);

// Invert unsaturated_alpha0 for the density giving a target alpha0*l. cm^-3.
double required_density(double alpha0_ell, double cell_length,
                        double wavelength, double Jg, double Je);

// Beam/power utilities (uniform-disk intensity convention).
double disk_intensity(double power_W, double beam_diameter_cm);  // W/m^2
double field_from_intensity(double intensity_W_m2);              // V/m
double field_from_power(double power_W, double beam_diameter_cm);  // V/m

// Coupling element d (C m) radiatively tied to the excited decay rate:
// d^2 = 3 pi eps0 hbar c^3 gamma0 / omega^3. This is the per-component
// element; multiply by sqrt(2Je+1) for the reduced element.
double radiative_dipole(double gamma0, double wavelength_cm);

double mean_speed(double mass_amu, double temperature_K);        // m/s
double doppler_temperature(double width_rad_s, double wavelength_cm,
                           double mass_amu);                     // K
double transit_rate(double mass_amu, double temperature_K,
                    double beam_diameter_cm);                    // 1/s

}  // namespace sqz
