#pragma once

#include <functional>
#include <vector>

#include "sqz/response.hpp"

namespace sqz {

// Gauss-Hermite rule mapped to the normalized Maxwell-Boltzmann shift
// distribution: integral f(delta) exp(-delta^2/w^2)/(sqrt(pi) w) d delta
// ~= sum_i weight_i f(w * node_i). Weights sum to 1.
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussHermite gauss_hermite(int order);

struct DopplerResult {
  DMResponse response;
  bool converged = true;  // doubling the order moved (alpha, g) by < 0.1%
  int order_used = 0;
};

// Average the extracted response over detuning shifts Delta -> Delta - k v.
// width is the 1/e half-width of the shift distribution (k * most probable
// speed), rad/s. width = 0 reproduces the bare response. The probe limit is
// taken on the averaged rotation rate (averaging commutes with the linear
// probe division). Result reported at 2*order with the doubling check
// against order.
DopplerResult doppler_average(const LevelScheme& scheme, const DriveSpec& drive,
                              double K, double width, int order = 64,
                              double eps_probe = 1e-3);

// Same averaging for an arbitrary scalar of detuning (test oracle hook).
double doppler_average_scalar(const std::function<double(double)>& f,
                              double detuning, double width, int order);

}  // namespace sqz
