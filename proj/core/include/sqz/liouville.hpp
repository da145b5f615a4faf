#pragma once

#include <Eigen/Dense>

#include "sqz/scheme.hpp"

namespace sqz {

// Monochromatic elliptical drive in the rotating frame. The field enters the
// Hamiltonian only through rabi = d E0 / hbar (rad/s) with d the
// per-component coupling element; detuning is measured from the scheme's
// reference (zero-offset) excited component.
struct DriveSpec {
  double rabi = 0.0;        // rad/s
  double detuning = 0.0;    // rad/s
  double ellipticity = 0.0; // rad, |eps| <= pi/4
  double pol_angle = 0.0;   // rad, major-axis angle theta
  double phase = 0.0;       // rad, overall optical phase
};

// d(vec rho)/dt = M vec(rho) + feed, column-major vectorization.
struct Liouvillian {
  Eigen::MatrixXcd M;
  Eigen::VectorXcd feed;
  int dim = 0;  // number of states
};

// Assemble Hamiltonian (RWA), relaxation, isotropic ground feed gamma/Ng and
// spontaneous repopulation gamma0 * sum_q Dq rho Dq^T.
Liouvillian build_system(const LevelScheme& scheme, const DriveSpec& drive);

// Steady state: the trace row replaces the first ground-population row of
// M x = -feed, which keeps the solve well-posed as gamma -> 0 when a single
// steady state still exists. Result is Hermitized. Throws ConvergenceError
// with a diagnostic when the system is singular (e.g. undriven dark
// degeneracy at gamma = 0).
Eigen::MatrixXcd steady_state(const Liouvillian& L);

// Residual ||M vec(rho) + feed||_2; fixed-point quality measure.
double steady_state_residual(const Liouvillian& L, const Eigen::MatrixXcd& rho);

}  // namespace sqz
