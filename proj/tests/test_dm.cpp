#include "sqz/response.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "sqz/constants.hpp"
#include "sqz/transitions.hpp"

using sqz::DMResponse;
using sqz::DriveSpec;
using sqz::LevelScheme;
using sqz::TransitionKind;
using sqz::TransitionSpec;

namespace {
constexpr double kPi = 3.14159265358979323846;

// gamma0 = 1 unit system; n = lambda = 1 so the engine's absorption matches
// unsaturated_alpha0 = 1/(2 pi) for the half-half system.
struct UnitSetup {
  LevelScheme scheme;
  double K;
  TransitionSpec spec;
};

UnitSetup unit_setup(TransitionKind kind, double gamma) {
  UnitSetup u;
  double je = (kind == TransitionKind::x_half_half) ? 0.5 : 1.5;
  u.scheme = sqz::make_j_scheme(0.5, je, gamma, 1.0);
  u.spec.system = kind;
  u.spec.gamma = gamma;
  u.spec.gamma0 = 1.0;
  u.spec.Jg = 0.5;
  u.spec.Je = je;
  // Density/wavelength chosen so response_scale = 3/(8 pi) n lambda^2 gamma0
  // reproduces unsaturated_alpha0 = n lambda^2 (2Je+1) / (4 pi):
  // alpha = (4K/3) x (dimensionless dispersion sum) in the engine's units.
  u.spec.density = 1.0;
  u.spec.wavelength = 1.0;
  u.K = sqz::response_scale(1.0, 1.0, 1.0);
  return u;
}

// Rabi frequency of the per-component coupling element for a given kappa:
// kappa = (2Je+1) rabi^2 / (gamma gamma0).
double rabi_for_kappa(double kappa, double je, double gamma, double gamma0) {
  return std::sqrt(kappa * gamma * gamma0 / (2 * je + 1));
}

DriveSpec linear_drive(double rabi, double detuning) {
  DriveSpec d;
  d.rabi = rabi;
  d.detuning = detuning;
  d.pol_angle = kPi / 2;
  return d;
}
}  // namespace

TEST_CASE("propagation scale") {
  CHECK(sqz::response_scale(1.0, 1.0, 1.0) ==
        doctest::Approx(3.0 / (8 * kPi)).epsilon(1e-14));
  // Linear in density, quadratic in wavelength.
  CHECK(sqz::response_scale(2e12, 795e-7, 3.6e7) ==
        doctest::Approx(2.0 * sqz::response_scale(1e12, 795e-7, 3.6e7))
            .epsilon(1e-13));
}

TEST_CASE("weak linear probe reproduces the unsaturated absorption") {
  // The optical coherence decays at (gamma + gamma0)/2, so the closed
  // transition limit alpha -> alpha0 needs gamma << gamma0 here.
  UnitSetup u = unit_setup(TransitionKind::x_half_half, 1e-6);
  double a0 = sqz::unsaturated_alpha0(u.spec);
  DMResponse r = sqz::extract_response(
      u.scheme, linear_drive(rabi_for_kappa(1e-6, 0.5, 1e-6, 1.0), 0.0), u.K);
  CHECK(r.alpha == doctest::Approx(a0).epsilon(1e-4));
  CHECK(r.g == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(r.probe_converged);

  // Lorentzian wing at one linewidth.
  DMResponse r1 = sqz::extract_response(
      u.scheme, linear_drive(rabi_for_kappa(1e-6, 0.5, 1e-6, 1.0), 1.0), u.K);
  CHECK(r1.alpha == doctest::Approx(a0 / 5.0).epsilon(1e-4));
}

TEST_CASE("axis rotation is odd in the drive ellipticity") {
  // g is defined per unit input ellipticity; an exactly zero-ellipticity
  // drive produces no axis rotation at all.
  UnitSetup u = unit_setup(TransitionKind::x_half_half, 1e-3);
  DriveSpec d = linear_drive(rabi_for_kappa(10.0, 0.5, 1e-3, 1.0), 1.0);
  sqz::EnvelopeDerivs lin = sqz::envelope_derivatives(u.scheme, d, u.K);
  CHECK(std::abs(lin.dtheta) < 1e-12);

  d.ellipticity = 1e-3;
  sqz::EnvelopeDerivs plus = sqz::envelope_derivatives(u.scheme, d, u.K);
  d.ellipticity = -1e-3;
  sqz::EnvelopeDerivs minus = sqz::envelope_derivatives(u.scheme, d, u.K);
  CHECK(plus.dtheta == doctest::Approx(-minus.dtheta).epsilon(1e-10));
  CHECK(plus.dlogE0 == doctest::Approx(minus.dlogE0).epsilon(1e-10));
}

TEST_CASE("half-half engine matches the closed-form response") {
  // 21-point detuning grids spanning +-10 power-broadened widths at weak,
  // unity and strong saturation; steady-state engine and closed-form rates
  // must agree to 5% in alpha and g.
  double gamma = 1e-3;
  UnitSetup u = unit_setup(TransitionKind::x_half_half, gamma);
  for (double kappa : {1e-2, 1.0, 1e2}) {
    double rabi = rabi_for_kappa(kappa, 0.5, gamma, 1.0);
    double a0 = sqz::unsaturated_alpha0(u.spec);
    double span = 10.0 * sqz::optimal_detuning(TransitionKind::x_half_half,
                                               kappa);
    for (int i = 0; i < 21; ++i) {
      double det = -span + 2 * span * i / 20.0;
      sqz::MediumResponse want = sqz::response_x(u.spec, {kappa, det});
      DMResponse got = sqz::extract_response(u.scheme, linear_drive(rabi, det),
                                             u.K);
      CHECK(got.probe_converged);
      CHECK(std::abs(got.alpha - want.alpha) <= 0.05 * want.alpha);
      double g_scale = std::abs(want.g) + 1e-3 * a0;
      CHECK(std::abs(got.g - want.g) <= 0.05 * g_scale);
    }
  }
}

TEST_CASE("threehalves engine matches the closed-form response") {
  double gamma = 1e-3;
  UnitSetup u = unit_setup(TransitionKind::half_threehalves, gamma);
  for (double kappa : {1e-2, 1.0, 1e2}) {
    double rabi = rabi_for_kappa(kappa, 1.5, gamma, 1.0);
    double a0 = sqz::unsaturated_alpha0(u.spec);
    double span =
        10.0 * sqz::optimal_detuning(TransitionKind::half_threehalves, kappa);
    for (int i = 0; i < 21; ++i) {
      double det = -span + 2 * span * i / 20.0;
      sqz::MediumResponse want = sqz::response_w(u.spec, {kappa, det});
      DMResponse got = sqz::extract_response(u.scheme, linear_drive(rabi, det),
                                             u.K);
      CHECK(got.probe_converged);
      CHECK(std::abs(got.alpha - want.alpha) <= 0.05 * want.alpha);
      double g_scale = std::abs(want.g) + 1e-3 * a0;
      CHECK(std::abs(got.g - want.g) <= 0.05 * g_scale);
      // Rotation must carry the reversed sign where it is appreciable.
      if (std::abs(want.g) > 0.02 * a0) CHECK(got.g * want.g > 0.0);
    }
  }
}

TEST_CASE("elliptization is suppressed against rotation by the detuning") {
  // Rotation and elliptization are the dispersive and absorptive responses
  // to the same ellipticity perturbation, so the exact steady state pins
  // their ratio at the Lorentzian dispersion/absorption ratio 2*detuning.
  double gamma = 1e-3;
  UnitSetup u = unit_setup(TransitionKind::x_half_half, gamma);
  for (double det : {1.0, 3.0}) {
    DMResponse r = sqz::extract_response(
        u.scheme, linear_drive(rabi_for_kappa(1.0, 0.5, gamma, 1.0), det),
        u.K);
    CHECK(r.g / r.se_rate == doctest::Approx(2.0 * det).epsilon(0.05));
  }
}

TEST_CASE("probe validation") {
  UnitSetup u = unit_setup(TransitionKind::x_half_half, 1e-3);
  DriveSpec d = linear_drive(0.03, 0.5);
  CHECK_THROWS_AS(
      (void)sqz::extract_response(u.scheme, d, u.K, 0.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)sqz::extract_response(u.scheme, d, u.K, -1e-3),
      std::invalid_argument);
}
