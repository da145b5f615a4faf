#pragma once

namespace sqz {

// Buffer-gas model constants. cgs-flavored units: cm, s.
struct BufferGasSpec {
  double n_b = 0.0;    // buffer density, cm^-3
  double a1 = 0.0;     // depolarization rate constant, cm^3/s
  double a2 = 0.0;     // pressure broadening constant, rad cm^3/s
  double sigma = 0.0;  // elastic cross section, cm^2
  double v = 0.0;      // mean relative speed, cm/s
  double x = 0.0;      // beam diameter, cm
};

struct EffectiveRates {
  double gamma_prime = 0.0;   // ground relaxation with buffer, rad/s
  double gamma0_prime = 0.0;  // pressure-broadened homogeneous width, rad/s
  double kappa_ratio = 0.0;   // saturation-parameter gain vs buffer-free
};

// Diffusion-limited transit plus depolarizing collisions:
//   gamma' = v/(3 n_b sigma x^2) + a1 n_b,  gamma0' = gamma0 + a2 n_b,
//   kappa'/kappa = gamma0 gamma_free / (gamma0' gamma').
// n_b = 0 is outside the diffusion model and throws std::domain_error.
EffectiveRates buffer_rates(const BufferGasSpec& spec, double gamma0,
                            double gamma_free);

// 1D maximization of kappa_ratio over n_b (golden section on a log bracket).
// With a2 = 0 the optimum is the analytic n_b* = sqrt(v/(3 sigma x^2 a1)).
struct BufferOptimum {
  double n_b_opt = 0.0;
  EffectiveRates rates;
};
BufferOptimum optimize_buffer_density(const BufferGasSpec& spec, double gamma0,
                                      double gamma_free);

}  // namespace sqz
