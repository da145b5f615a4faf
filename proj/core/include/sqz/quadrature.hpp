#pragma once

namespace sqz {

// Dimensionless slab numbers controlling the output quadrature noise.
struct QuadratureGeometry {
  double g_ell = 0.0;      // rotation strength g*l (signed)
  double alpha_ell = 0.0;  // absorption depth alpha*l >= 0
};

enum class VarianceMode { exact, asymptotic };

struct SqueezingResult {
  double s = 1.0;             // amplitude squeeze factor, >= 0
  double s_db = 0.0;          // 10*log10(s)
  double chi_opt = 0.0;       // optimal LO phase in [0, pi)
  double ell_opt_alpha = 0.0; // alpha * l_opt
  bool in_validity = true;    // g/alpha > 10
};

// Normalized x-quadrature variance after the medium, vacuum = 1.
// Lossless part cos^2(chi) + (sin(chi) - g_ell*cos(chi))^2, then attenuation
// e^{-alpha_ell} with (1 - e^{-alpha_ell}) of vacuum noise added in
// quadrature.
double variance(const QuadratureGeometry& geom, double chi);

// LO phase minimizing the lossless variance, in [0, pi). For g_ell = 0 the
// variance is flat; returns 0 and sets *degenerate when provided.
double optimal_phase(double g_ell, bool* degenerate = nullptr);

// Minimum lossless variance. exact: 1/(1 + G/2 + sqrt(G(G+4))/2) with
// G = g_ell^2 (the sum form of the closed-form minimum; the difference form
// cancels catastrophically for large G). asymptotic: 4/G, the large-g_ell
// expression the optimal-length chain is built on.
double min_variance(double g_ell, VarianceMode mode = VarianceMode::exact);

// Exact minimum variance including absorption, at the optimal phase.
double lossy_min_variance(double g_ell, double alpha_ell);

// alpha*l_opt = 2 (alpha/g)^{2/3}, the minimizer of 4/(g l)^2 + alpha l.
// Throws std::domain_error unless g > 0 and alpha > 0.
double optimal_length(double g, double alpha);

// Length- and phase-optimized amplitude squeeze factor
// s = (1/sqrt(3)) (g/alpha)^{1/3} with the associated chi_opt (at the optimal
// g*l) and alpha*l_opt. Throws std::domain_error unless g > 0 and alpha > 0;
// callers with signed g pass |g| and track the mirrored chi branch themselves.
SqueezingResult squeezing_parameter(double g, double alpha);

// v(chi) * v(chi + pi/2) in vacuum-variance units, lossless. >= 1 always;
// equals 1 at the stationary phases (minimum-uncertainty output).
double uncertainty_product(double g_ell, double chi);

// dB of an amplitude squeeze factor derived from a variance:
// 10*log10(1/sqrt(v)) = -5*log10(v).
double squeeze_db_from_variance(double v_min);

}  // namespace sqz
