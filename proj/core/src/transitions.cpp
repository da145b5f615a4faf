#include "sqz/transitions.hpp"

#include <cmath>
#include <stdexcept>

#include "sqz/constants.hpp"
#include "sqz/quadrature.hpp"

namespace sqz {


std::vector<std::string> validate(const TransitionSpec& spec) {
  std::vector<std::string> warnings;
  if (spec.gamma0 <= 0.0 || spec.gamma <= 0.0)
    warnings.push_back("non-positive relaxation rate");
  else if (spec.gamma / spec.gamma0 >= 0.01)
    warnings.push_back("gamma/gamma0 >= 0.01: closed forms assume slow ground relaxation");
  if (spec.density <= 0.0) warnings.push_back("non-positive density");
  if (spec.wavelength <= 0.0) warnings.push_back("non-positive wavelength");
  return warnings;
}

double saturation_kappa(const TransitionSpec& spec, double field_amplitude) {
  if (spec.gamma <= 0.0 || spec.gamma0 <= 0.0)
    throw std::domain_error("saturation_kappa: rates must be positive");
  double rabi = spec.dipole * field_amplitude / consts::hbar;
  return rabi * rabi / (spec.gamma * spec.gamma0);
}

double unsaturated_alpha0(const TransitionSpec& spec) {
  return spec.density / (2.0 * consts::pi) * spec.wavelength * spec.wavelength *
         (2.0 * spec.Je + 1.0) / (2.0 * spec.Jg + 1.0);
}

namespace {
MediumResponse response_impl(const TransitionSpec& spec,
                             const SaturationPoint& pt, double g_coef,
                             double g_sat, double se_det_factor) {
  double d = pt.detuning;
  double lor = 1.0 + 4.0 * d * d;
  MediumResponse r;
  r.alpha0 = unsaturated_alpha0(spec);
  r.alpha = r.alpha0 /
            (lor + (spec.gamma / spec.gamma0) * pt.kappa / 3.0);
  double sat = lor + pt.kappa * g_sat;
  r.g = g_coef * r.alpha * pt.kappa * d / sat;
  // Even in detuning with a finite resonant limit; g = se_det_factor * D * se.
  r.se_rate = g_coef / se_det_factor * r.alpha * pt.kappa / sat;
  return r;
}
}  // namespace

MediumResponse response_x(const TransitionSpec& spec, const SaturationPoint& pt) {
  if (spec.system != TransitionKind::x_half_half)
    throw std::invalid_argument("response_x: spec is not an X system");
  return response_impl(spec, pt, 2.0 / 9.0, 1.0 / 9.0, 1.0);
}

MediumResponse response_w(const TransitionSpec& spec, const SaturationPoint& pt) {
  if (spec.system != TransitionKind::half_threehalves)
    throw std::invalid_argument("response_w: spec is not a 1/2->3/2 system");
  return response_impl(spec, pt, -1.0 / 18.0, 1.0 / 18.0, 2.0);
}

MediumResponse response(const TransitionSpec& spec, const SaturationPoint& pt) {
  return spec.system == TransitionKind::x_half_half ? response_x(spec, pt)
                                                    : response_w(spec, pt);
}

double squeezing_profile(const TransitionSpec& spec, const SaturationPoint& pt) {
  SaturationPoint abs_pt{pt.kappa, std::abs(pt.detuning)};
  MediumResponse r = response(spec, abs_pt);
  if (r.g == 0.0 || r.alpha <= 0.0) return 0.0;
  return squeezing_parameter(std::abs(r.g), r.alpha).s;
}

double optimal_detuning(TransitionKind system, double kappa) {
  if (kappa < 0.0) throw std::domain_error("optimal_detuning: kappa < 0");
  double sat = system == TransitionKind::x_half_half ? kappa / 9.0 : kappa / 18.0;
  return 0.5 * std::sqrt(1.0 + sat);
}

double asymptotic_squeezing(TransitionKind system, double kappa) {
  double denom = system == TransitionKind::x_half_half ? 972.0 : 7776.0;
  return std::pow(kappa / denom, 1.0 / 6.0);
}

double optimal_thickness(double kappa) {
  return std::pow(4.0 * std::sqrt(2.0) * kappa / 9.0, 2.0 / 3.0);
}

double required_density(double alpha0_ell, double cell_length,
                        double wavelength, double Jg, double Je) {
  if (cell_length <= 0.0 || wavelength <= 0.0)
    throw std::domain_error("required_density: non-positive geometry");
  double per_atom = wavelength * wavelength / (2.0 * consts::pi) *
                    (2.0 * Je + 1.0) / (2.0 * Jg + 1.0);
  return alpha0_ell / (cell_length * per_atom);
}

double disk_intensity(double power_W, double beam_diameter_cm) {
  if (beam_diameter_cm <= 0.0)
    throw std::domain_error("disk_intensity: non-positive diameter");
  double r_m = 0.5 * beam_diameter_cm * 1e-2;
  return power_W / (consts::pi * r_m * r_m);
}

double field_from_intensity(double intensity_W_m2) {
  return std::sqrt(2.0 * intensity_W_m2 / (consts::c_light * consts::eps0));
}

double field_from_power(double power_W, double beam_diameter_cm) {
  return field_from_intensity(disk_intensity(power_W, beam_diameter_cm));
}

double radiative_dipole(double gamma0, double wavelength_cm) {
  double omega = 2.0 * consts::pi * consts::c_light / (wavelength_cm * 1e-2);
  return std::sqrt(3.0 * consts::pi * consts::eps0 * consts::hbar *
                   consts::c_light * consts::c_light * consts::c_light *
                   gamma0 / (omega * omega * omega));
}

double mean_speed(double mass_amu, double temperature_K) {
  double m = mass_amu * consts::amu;
  return std::sqrt(8.0 * consts::k_boltzmann * temperature_K /
                   (consts::pi * m));
}

double doppler_temperature(double width_rad_s, double wavelength_cm,
                           double mass_amu) {
  // width is the 1/e half-width of exp(-(delta/w)^2): w = k vp,
  // vp = sqrt(2 kB T / m).
  double k = 2.0 * consts::pi / (wavelength_cm * 1e-2);
  double vp = width_rad_s / k;
  return mass_amu * consts::amu * vp * vp / (2.0 * consts::k_boltzmann);
}

double transit_rate(double mass_amu, double temperature_K,
                    double beam_diameter_cm) {
  if (beam_diameter_cm <= 0.0)
    throw std::domain_error("transit_rate: non-positive diameter");
  return mean_speed(mass_amu, temperature_K) / (beam_diameter_cm * 1e-2);
}

}  // namespace sqz
