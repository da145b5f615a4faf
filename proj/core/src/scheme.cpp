#include "sqz/scheme.hpp"

#include <cmath>
#include <stdexcept>

#include "sqz/angular.hpp"

namespace sqz {

namespace {

void add_couplings(LevelScheme& s,
                   const std::map<double, double>& line_factor_h,
                   const std::map<double, double>& line_factor_d) {
  int n = static_cast<int>(s.states.size());
  for (int e = 0; e < n; ++e) {
    if (!s.states[e].excited) continue;
    for (int g = 0; g < n; ++g) {
      if (s.states[g].excited) continue;
      for (int q = -1; q <= 1; ++q) {
        if (std::abs(s.states[g].m + q - s.states[e].m) > 1e-9) continue;
        double c = clebsch_gordan(s.states[g].F, s.states[g].m, 1.0, q,
                                  s.states[e].F, s.states[e].m);
        if (c == 0.0) continue;
        s.couplings.push_back({e, g, q, c * line_factor_h.at(s.states[e].F)});
        s.decay.push_back({e, g, q, c * line_factor_d.at(s.states[e].F)});
      }
    }
  }
}

}  // namespace

LevelScheme make_j_scheme(double Jg, double Je, double gamma, double gamma0) {
  LevelScheme s;
  s.gamma = gamma;
  s.gamma0 = gamma0;
  for (double m = -Jg; m <= Jg + 0.1; m += 1.0)
    s.states.push_back({false, Jg, m, 0.0});
  for (double m = -Je; m <= Je + 0.1; m += 1.0)
    s.states.push_back({true, Je, m, 0.0});
  s.n_ground = static_cast<int>(std::round(2.0 * Jg + 1.0));
  s.n_excited = static_cast<int>(std::round(2.0 * Je + 1.0));
  add_couplings(s, {{Je, 1.0}}, {{Je, 1.0}});
  return s;
}

LevelScheme make_hyperfine_scheme(double Jg, double Je, double I, double Fg,
                                  const std::map<double, double>& fp_offsets,
                                  double gamma, double gamma0) {
  LevelScheme s;
  s.gamma = gamma;
  s.gamma0 = gamma0;
  for (double m = -Fg; m <= Fg + 0.1; m += 1.0)
    s.states.push_back({false, Fg, m, 0.0});
  s.n_ground = static_cast<int>(std::round(2.0 * Fg + 1.0));

  std::map<double, double> line_h, line_d;
  for (const auto& [fp, offset] : fp_offsets) {
    double c = hyperfine_amplitude(Jg, Je, I, Fg, fp);
    if (std::abs(c) < 1e-12) continue;  // dipole-forbidden line
    // Full amplitude drives the Hamiltonian and the emitted field; the decay
    // pattern keeps only the sign so each excited state branches entirely
    // into the retained ground level (closed-subsystem treatment of the
    // other ground hyperfine level).
    line_h[fp] = c;
    line_d[fp] = c > 0.0 ? 1.0 : -1.0;
    for (double m = -fp; m <= fp + 0.1; m += 1.0)
      s.states.push_back({true, fp, m, offset});
    s.n_excited += static_cast<int>(std::round(2.0 * fp + 1.0));
  }
  if (s.n_excited == 0)
    throw std::invalid_argument("make_hyperfine_scheme: no coupled excited level");
  add_couplings(s, line_h, line_d);
  return s;
}

void validate(const LevelScheme& scheme) {
  int n = static_cast<int>(scheme.states.size());
  if (n == 0) throw std::invalid_argument("scheme: empty state list");
  int ng = 0, ne = 0;
  for (const auto& st : scheme.states) (st.excited ? ne : ng)++;
  if (ng != scheme.n_ground || ne != scheme.n_excited)
    throw std::invalid_argument("scheme: manifold counts disagree with states");
  if (scheme.gamma0 <= 0.0)
    throw std::invalid_argument("scheme: gamma0 must be positive");

  auto check_list = [&](const std::vector<DipoleAmplitude>& list) {
    for (const auto& d : list) {
      if (d.e < 0 || d.e >= n || d.g < 0 || d.g >= n)
        throw std::invalid_argument("scheme: coupling index out of range");
      if (!scheme.states[d.e].excited || scheme.states[d.g].excited)
        throw std::invalid_argument("scheme: coupling must join excited to ground");
      if (d.q < -1 || d.q > 1)
        throw std::invalid_argument("scheme: bad spherical component");
      if (std::abs(scheme.states[d.g].m + d.q - scheme.states[d.e].m) > 1e-9)
        throw std::invalid_argument("scheme: m selection rule violated");
    }
  };
  check_list(scheme.couplings);
  check_list(scheme.decay);

  // Branching: every excited state must decay with total rate gamma0, i.e.
  // sum of squared decay amplitudes = 1.
  std::vector<double> branch(n, 0.0);
  for (const auto& d : scheme.decay) branch[d.e] += d.amp * d.amp;
  for (int i = 0; i < n; ++i) {
    if (!scheme.states[i].excited) continue;
    if (std::abs(branch[i] - 1.0) > 1e-9)
      throw std::invalid_argument("scheme: decay branching does not sum to gamma0");
  }
}

}  // namespace sqz
