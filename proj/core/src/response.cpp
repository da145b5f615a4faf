#include "sqz/response.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "sqz/constants.hpp"
#include "sqz/errors.hpp"

namespace sqz {

namespace {

using cd = std::complex<double>;
using Vec2 = Eigen::Vector2cd;

Vec2 ellipse_envelope(double theta, double eps, double phi) {
  cd ph = std::polar(1.0, phi);
  double ct = std::cos(theta), st = std::sin(theta);
  double ce = std::cos(eps), se = std::sin(eps);
  return {ph * cd{ct * ce, -st * se}, ph * cd{st * ce, ct * se}};
}

// p_q = 2 sum c <g|rho|e> over couplings, the source term of the reduced
// wave equation dA_q/dz = -i K p_q.
Vec2 polarization_xy(const LevelScheme& scheme, const Eigen::MatrixXcd& rho) {
  cd pp{0.0, 0.0}, pm{0.0, 0.0};
  for (const auto& cpl : scheme.couplings) {
    cd term = 2.0 * cpl.amp * rho(cpl.g, cpl.e);
    if (cpl.q > 0)
      pp += term;
    else if (cpl.q < 0)
      pm += term;
  }
  // Cartesian from spherical: Ax = (A- - A+)/sqrt2, Ay = i(A- + A+)/sqrt2.
  double rt2 = std::sqrt(2.0);
  return {(pm - pp) / rt2, cd{0.0, 1.0} * (pm + pp) / rt2};
}

}  // namespace

double response_scale(double density_cm3, double wavelength_cm, double gamma0) {
  return 3.0 / (8.0 * consts::pi) * density_cm3 * wavelength_cm *
         wavelength_cm * gamma0;
}

EnvelopeDerivs envelope_derivatives(const LevelScheme& scheme,
                                    const DriveSpec& drive, double K) {
  if (drive.rabi <= 0.0)
    throw std::invalid_argument(
        "envelope_derivatives: zero field has no ellipse parametrization");
  Eigen::MatrixXcd rho = steady_state(build_system(scheme, drive));
  Vec2 p = polarization_xy(scheme, rho);
  Vec2 da = cd{0.0, -1.0} * K * p;  // dA/dz = -i K p

  // A(E0, phi, theta, eps) = E0 u; solve the 4x4 real Jacobian for the
  // parameter velocities that reproduce dA/dz.
  double th = drive.pol_angle, ep = drive.ellipticity, phi = drive.phase;
  Vec2 u = ellipse_envelope(th, ep, phi);
  cd ph = std::polar(1.0, phi);
  double ct = std::cos(th), st = std::sin(th);
  double ce = std::cos(ep), se = std::sin(ep);
  Vec2 du_dth{ph * cd{-st * ce, -ct * se}, ph * cd{ct * ce, -st * se}};
  Vec2 du_de{ph * cd{-ct * se, -st * ce}, ph * cd{-st * se, ct * ce}};

  double e0 = drive.rabi;
  Vec2 cols[4] = {u, cd{0.0, 1.0} * e0 * u, e0 * du_dth, e0 * du_de};
  Eigen::Matrix4d jac;
  Eigen::Vector4d rhs;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 4; ++c) {
      jac(r, c) = cols[c](r).real();
      jac(r + 2, c) = cols[c](r).imag();
    }
    rhs(r) = da(r).real();
    rhs(r + 2) = da(r).imag();
  }
  Eigen::Vector4d sol = jac.partialPivLu().solve(rhs);
  EnvelopeDerivs out;
  out.dlogE0 = sol(0) / e0;
  out.dphi = sol(1);
  out.dtheta = sol(2);
  out.deps = sol(3);
  return out;
}

DMResponse extract_response(const LevelScheme& scheme, const DriveSpec& drive,
                            double K, double eps_probe) {
  if (eps_probe <= 0.0)
    throw std::invalid_argument("extract_response: eps_probe must be > 0");
  DriveSpec probe = drive;
  probe.ellipticity = eps_probe;
  EnvelopeDerivs full = envelope_derivatives(scheme, probe, K);
  probe.ellipticity = 0.5 * eps_probe;
  EnvelopeDerivs half = envelope_derivatives(scheme, probe, K);

  double g_full = full.dtheta / eps_probe;
  double g_half = half.dtheta / (0.5 * eps_probe);

  DMResponse r;
  r.alpha = -2.0 * half.dlogE0;
  r.g = g_half;
  r.dphi_dz = half.dphi;
  r.se_rate = half.deps / (0.5 * eps_probe);
  // Relative halving test on g, floored at 1e-8 alpha: below that the
  // rotation is numerically zero and a relative test is meaningless.
  double scale =
      std::max({std::abs(g_half), 1e-8 * std::abs(r.alpha), 1e-300});
  r.probe_converged = std::abs(g_full - g_half) / scale < 0.01;
  return r;
}

}  // namespace sqz
