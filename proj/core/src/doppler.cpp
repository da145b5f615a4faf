#include "sqz/doppler.hpp"

#include <algorithm>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace sqz {

GaussHermite gauss_hermite(int order) {
  if (order < 1) throw std::invalid_argument("gauss_hermite: order < 1");
  // Golub-Welsch on the Hermite Jacobi matrix: off-diagonals sqrt(k/2),
  // weights from the squared first components of the eigenvectors. Weights
  // are returned pre-divided by sqrt(pi) so they sum to 1 against
  // exp(-x^2).
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    double b = std::sqrt(k / 2.0);
    j(k - 1, k) = b;
    j(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  GaussHermite gh;
  gh.nodes.resize(order);
  gh.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    gh.nodes[i] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    gh.weights[i] = v0 * v0;
  }
  return gh;
}

namespace {

// One full probe-limited extraction averaged over shifted detunings.
DMResponse averaged_response(const LevelScheme& scheme, const DriveSpec& drive,
                             double K, double width, int order,
                             double eps_probe) {
  GaussHermite gh = gauss_hermite(order);
  auto solve_at = [&](double eps) {
    EnvelopeDerivs acc;
    for (int i = 0; i < order; ++i) {
      DriveSpec d = drive;
      d.ellipticity = eps;
      d.detuning = drive.detuning - width * gh.nodes[i];
      EnvelopeDerivs e = envelope_derivatives(scheme, d, K);
      double w = gh.weights[i];
      acc.dlogE0 += w * e.dlogE0;
      acc.dphi += w * e.dphi;
      acc.dtheta += w * e.dtheta;
      acc.deps += w * e.deps;
    }
    return acc;
  };
  EnvelopeDerivs full = solve_at(eps_probe);
  EnvelopeDerivs half = solve_at(0.5 * eps_probe);
  DMResponse r;
  r.alpha = -2.0 * half.dlogE0;
  r.g = half.dtheta / (0.5 * eps_probe);
  r.dphi_dz = half.dphi;
  r.se_rate = half.deps / (0.5 * eps_probe);
  double g_full = full.dtheta / eps_probe;
  // Same floored halving test as the bare extraction.
  double scale = std::max({std::abs(r.g), 1e-8 * std::abs(r.alpha), 1e-300});
  r.probe_converged = std::abs(g_full - r.g) / scale < 0.01;
  return r;
}

}  // namespace

DopplerResult doppler_average(const LevelScheme& scheme, const DriveSpec& drive,
                              double K, double width, int order,
                              double eps_probe) {
  DopplerResult out;
  if (width == 0.0) {
    out.response = extract_response(scheme, drive, K, eps_probe);
    out.converged = true;
    out.order_used = 0;
    return out;
  }
  if (width < 0.0) throw std::invalid_argument("doppler_average: width < 0");
  DMResponse coarse = averaged_response(scheme, drive, K, width, order, eps_probe);
  DMResponse fine =
      averaged_response(scheme, drive, K, width, 2 * order, eps_probe);
  double num = std::hypot(fine.alpha - coarse.alpha, fine.g - coarse.g);
  double den = std::max(std::hypot(fine.alpha, fine.g), 1e-300);
  out.response = fine;
  out.converged = num / den < 1e-3;
  out.order_used = 2 * order;
  return out;
}

double doppler_average_scalar(const std::function<double(double)>& f,
                              double detuning, double width, int order) {
  if (width == 0.0) return f(detuning);
  GaussHermite gh = gauss_hermite(order);
  double acc = 0.0;
  for (int i = 0; i < order; ++i)
    acc += gh.weights[i] * f(detuning - width * gh.nodes[i]);
  return acc;
}

}  // namespace sqz
