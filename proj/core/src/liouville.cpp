#include "sqz/liouville.hpp"

#include <cmath>
#include <complex>

#include "sqz/errors.hpp"

namespace sqz {

namespace {

using cd = std::complex<double>;

// Spherical components of the transverse polarization vector
// u = e^{i phi} (cos(th)cos(eps) - i sin(th)sin(eps),
//                sin(th)cos(eps) + i cos(th)sin(eps)):
// u_{+1} = -(ux + i uy)/sqrt2, u_{-1} = (ux - i uy)/sqrt2, u_0 = 0.
struct SphericalField {
  cd up, um;
  cd q(int qi) const { return qi > 0 ? up : (qi < 0 ? um : cd{0.0, 0.0}); }
};

SphericalField drive_components(const DriveSpec& d) {
  cd ph = std::polar(1.0, d.phase);
  double ct = std::cos(d.pol_angle), st = std::sin(d.pol_angle);
  double ce = std::cos(d.ellipticity), se = std::sin(d.ellipticity);
  cd ux = ph * cd{ct * ce, -st * se};
  cd uy = ph * cd{st * ce, ct * se};
  double rt2 = std::sqrt(2.0);
  return {-(ux + cd{0, 1} * uy) / rt2, (ux - cd{0, 1} * uy) / rt2};
}

}  // namespace

Liouvillian build_system(const LevelScheme& scheme, const DriveSpec& drive) {
  validate(scheme);
  const int n = static_cast<int>(scheme.states.size());
  const int n2 = n * n;

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& st = scheme.states[i];
    h(i, i) = st.excited ? st.energy - drive.detuning : st.energy;
  }
  SphericalField u = drive_components(drive);
  for (const auto& cpl : scheme.couplings) {
    // Omega_eg = rabi * amp * conj(u_q); RWA coupling -Omega/2.
    cd om = drive.rabi * cpl.amp * std::conj(u.q(cpl.q));
    h(cpl.e, cpl.g) += -0.5 * om;
    h(cpl.g, cpl.e) += -0.5 * std::conj(om);
  }

  Eigen::VectorXd rates(n);
  for (int i = 0; i < n; ++i)
    rates(i) = scheme.gamma + (scheme.states[i].excited ? scheme.gamma0 : 0.0);

  Liouvillian lv;
  lv.dim = n;
  lv.M = Eigen::MatrixXcd::Zero(n2, n2);
  lv.feed = Eigen::VectorXcd::Zero(n2);

  // Column-major vec: element (r, c) sits at index c*n + r.
  // -i[H, rho]: H rho couples within a column, rho H within a row.
  const cd im{0.0, 1.0};
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      int row = c * n + r;
      for (int k = 0; k < n; ++k) {
        if (h(r, k) != 0.0) lv.M(row, c * n + k) -= im * h(r, k);
        if (h(k, c) != 0.0) lv.M(row, k * n + r) += im * h(k, c);
      }
      lv.M(row, row) -= 0.5 * (rates(r) + rates(c));
    }

  // Repopulation gamma0 * sum_q Dq rho Dq^T with Dq[g, e] the decay
  // amplitudes: vec form adds gamma0 * Dq_col[g2,e2] * Dq_row[g1,e1] at
  // (g2*n + g1, e2*n + e1).
  for (const auto& d1 : scheme.decay)
    for (const auto& d2 : scheme.decay) {
      if (d1.q != d2.q) continue;
      lv.M(d2.g * n + d1.g, d2.e * n + d1.e) +=
          scheme.gamma0 * d1.amp * d2.amp;
    }

  for (int i = 0; i < n; ++i)
    if (!scheme.states[i].excited)
      lv.feed(i * n + i) = scheme.gamma / scheme.n_ground;

  return lv;
}

Eigen::MatrixXcd steady_state(const Liouvillian& lv) {
  const int n = lv.dim;
  Eigen::MatrixXcd a = lv.M;
  Eigen::VectorXcd b = -lv.feed;
  // Normalization row: the rate equations are linearly dependent once
  // gamma -> 0 (total population conserved), so overwrite one population row
  // with Tr rho = 1. For nonsingular M this returns the same solution because
  // the steady state already has unit trace.
  a.row(0).setZero();
  for (int k = 0; k < n; ++k) a(0, k * n + k) = 1.0;
  b(0) = 1.0;

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  Eigen::VectorXcd x = lu.solve(b);
  double rel = (a * x - b).norm() / std::max(1.0, b.norm());
  if (!x.allFinite() || rel > 1e-8)
    throw ConvergenceError(
        "steady_state: singular rate equations (residual " +
        std::to_string(rel) + "); dark degeneracy with gamma = 0?");

  Eigen::MatrixXcd rho = Eigen::Map<Eigen::MatrixXcd>(x.data(), n, n);
  return 0.5 * (rho + rho.adjoint().eval());
}

double steady_state_residual(const Liouvillian& lv,
                             const Eigen::MatrixXcd& rho) {
  Eigen::VectorXcd v =
      Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
  return (lv.M * v + lv.feed).norm();
}

}  // namespace sqz
