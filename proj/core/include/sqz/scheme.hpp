#pragma once

#include <map>
#include <vector>

namespace sqz {

// One Zeeman sublevel. F is the angular-momentum label the dipole couplings
// are built on (J for bare fine structure, F for hyperfine manifolds).
// energy is the rotating-frame offset within its manifold, rad/s; the
// reference (lowest) excited component sits at 0.
struct AtomicState {
  bool excited = false;
  double F = 0.0;
  double m = 0.0;
  double energy = 0.0;
};

// Dimensionless dipole amplitude <e|d_q|g> in units of the per-component
// coupling element d.
struct DipoleAmplitude {
  int e = 0;
  int g = 0;
  int q = 0;  // spherical component, -1/0/+1
  double amp = 0.0;
};

struct LevelScheme {
  std::vector<AtomicState> states;
  std::vector<DipoleAmplitude> couplings;  // drive + emission amplitudes
  std::vector<DipoleAmplitude> decay;      // branching pattern, renormalized
  double gamma = 0.0;                      // ground depolarization, rad/s
  double gamma0 = 0.0;                     // excited decay, rad/s
  int n_ground = 0;
  int n_excited = 0;
};

// Bare Jg -> Je scheme (all Zeeman sublevels, degenerate manifolds).
LevelScheme make_j_scheme(double Jg, double Je, double gamma, double gamma0);

// One ground hyperfine level Fg coupled to every dipole-allowed excited F'.
// fp_offsets maps F' -> energy offset (rad/s) from the lowest coupled F'.
// Couplings carry the full relative line amplitudes; the spontaneous-decay
// pattern keeps only their signs so each excited state branches entirely
// back into the kept ground manifold (closed-subsystem treatment).
LevelScheme make_hyperfine_scheme(double Jg, double Je, double I, double Fg,
                                  const std::map<double, double>& fp_offsets,
                                  double gamma, double gamma0);

// Selection rules, m bookkeeping, branching sums. Throws std::invalid_argument.
void validate(const LevelScheme& scheme);

}  // namespace sqz
