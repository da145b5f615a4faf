#include "sqz/buffer.hpp"

#include <cmath>
#include <stdexcept>

namespace sqz {

EffectiveRates buffer_rates(const BufferGasSpec& spec, double gamma0,
                            double gamma_free) {
  if (spec.n_b <= 0.0)
    throw std::domain_error("buffer_rates: n_b must be positive (diffusion model)");
  if (spec.sigma <= 0.0 || spec.v <= 0.0 || spec.x <= 0.0)
    throw std::domain_error("buffer_rates: sigma, v, x must be positive");
  EffectiveRates r;
  r.gamma_prime =
      spec.v / (3.0 * spec.n_b * spec.sigma * spec.x * spec.x) +
      spec.a1 * spec.n_b;
  r.gamma0_prime = gamma0 + spec.a2 * spec.n_b;
  r.kappa_ratio = gamma0 * gamma_free / (r.gamma0_prime * r.gamma_prime);
  return r;
}

BufferOptimum optimize_buffer_density(const BufferGasSpec& spec, double gamma0,
                                      double gamma_free) {
  if (spec.a1 <= 0.0)
    throw std::domain_error("optimize_buffer_density: a1 must be positive");
  // kappa_ratio is unimodal in log n_b: transit relaxation falls as 1/n_b,
  // depolarization and broadening rise linearly. Golden section on log n_b
  // around the a2 = 0 analytic optimum.
  double n_star = std::sqrt(spec.v / (3.0 * spec.sigma * spec.x * spec.x * spec.a1));
  double lo = std::log(n_star) - 6.0, hi = std::log(n_star) + 6.0;
  auto value = [&](double ln_n) {
    BufferGasSpec s = spec;
    s.n_b = std::exp(ln_n);
    return buffer_rates(s, gamma0, gamma_free).kappa_ratio;
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = value(c), fd = value(d);
  while (b - a > 1e-10) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = value(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = value(d);
    }
  }
  BufferOptimum opt;
  opt.n_b_opt = std::exp(0.5 * (a + b));
  BufferGasSpec s = spec;
  s.n_b = opt.n_b_opt;
  opt.rates = buffer_rates(s, gamma0, gamma_free);
  return opt;
}

}  // namespace sqz
