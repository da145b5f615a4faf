#include "sqz/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sqz {

namespace {
constexpr double pi = std::numbers::pi;

// Lossless variance in vacuum units. cos^2 + (sin - G cos)^2 rather than the
// expanded 1 - 2Gl sc + (Gl)^2 c^2: same polynomial, no cancellation at the
// minimum where the two expanded terms nearly annihilate.
double v0(double g_ell, double chi) {
  double c = std::cos(chi), s = std::sin(chi);
  double t = s - g_ell * c;
  return c * c + t * t;
}
}  // namespace

double variance(const QuadratureGeometry& geom, double chi) {
  double a = std::exp(-geom.alpha_ell);
  return a * v0(geom.g_ell, chi) + (1.0 - a);
}

double optimal_phase(double g_ell, bool* degenerate) {
  if (degenerate) *degenerate = false;
  if (g_ell == 0.0) {
    if (degenerate) *degenerate = true;
    return 0.0;
  }
  // Stationary phases of v0: tan(2 chi) = -2/(g l), branches pi/2 apart;
  // pick the minimizing one in [0, pi).
  double chi0 = 0.5 * std::atan2(-2.0, g_ell);
  double best = 0.0, vbest = 0.0;
  for (int k = 0; k < 2; ++k) {
    double chi = chi0 + k * pi / 2.0;
    chi -= pi * std::floor(chi / pi);  // into [0, pi)
    double v = v0(g_ell, chi);
    if (k == 0 || v < vbest) {
      vbest = v;
      best = chi;
    }
  }
  return best;
}

double min_variance(double g_ell, VarianceMode mode) {
  double big = g_ell * g_ell;
  if (mode == VarianceMode::asymptotic) {
    if (big == 0.0) throw std::domain_error("min_variance: asymptotic needs g_ell != 0");
    return 4.0 / big;
  }
  if (big == 0.0) return 1.0;
  // 1 + G/2 - (2 + G/2)/sqrt(1 + 4/G), written with the identity
  // (2 + G/2)/sqrt(1 + 4/G) = sqrt(G(G+4))/2 and then inverted:
  //   v_min = 1/(1 + G/2 + sqrt(G(G+4))/2),
  // which evaluates without the catastrophic subtraction of the raw form.
  return 1.0 / (1.0 + 0.5 * big + 0.5 * std::sqrt(big * (big + 4.0)));
}

double lossy_min_variance(double g_ell, double alpha_ell) {
  double a = std::exp(-alpha_ell);
  return a * min_variance(g_ell, VarianceMode::exact) + (1.0 - a);
}

double optimal_length(double g, double alpha) {
  if (g <= 0.0 || alpha <= 0.0)
    throw std::domain_error("optimal_length: g and alpha must be positive");
  return 2.0 * std::pow(alpha / g, 2.0 / 3.0);
}

double squeeze_db_from_variance(double v_min) {
  if (v_min <= 0.0) throw std::domain_error("squeeze_db_from_variance: v <= 0");
  // s is an amplitude ratio, v a variance: s = 1/sqrt(v), in dB 10 log10 s.
  return -5.0 * std::log10(v_min);
}

SqueezingResult squeezing_parameter(double g, double alpha) {
  if (g <= 0.0 || alpha <= 0.0)
    throw std::domain_error("squeezing_parameter: g and alpha must be positive");
  SqueezingResult r;
  double ratio = g / alpha;
  r.s = std::pow(ratio, 1.0 / 3.0) / std::sqrt(3.0);
  r.s_db = 10.0 * std::log10(r.s);
  r.ell_opt_alpha = optimal_length(g, alpha);
  r.chi_opt = optimal_phase(ratio * r.ell_opt_alpha);  // at g*l_opt
  r.in_validity = ratio > 10.0;
  return r;
}

double uncertainty_product(double g_ell, double chi) {
  return v0(g_ell, chi) * v0(g_ell, chi + pi / 2.0);
}

}  // namespace sqz
