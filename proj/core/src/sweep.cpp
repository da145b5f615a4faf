#include "sqz/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "sqz/errors.hpp"
#include "sqz/parallel.hpp"
#include "sqz/quadrature.hpp"

namespace sqz {

namespace {

TransitionKind kind_of(SweepModel model) {
  switch (model) {
    case SweepModel::analytic_x:
      return TransitionKind::x_half_half;
    case SweepModel::analytic_d2:
      return TransitionKind::half_threehalves;
    default:
      throw std::invalid_argument("analytic kind requested for dm model");
  }
}

ScanRow analytic_row(const TransitionSpec& medium, double kappa, double d,
                     double cell_length) {
  MediumResponse r = response(medium, {kappa, d});
  ScanRow row;
  row.detuning = d;
  row.alpha_ell = r.alpha * cell_length;
  row.g_ell = r.g * cell_length;
  // Length/phase-optimized squeezing from the local g/alpha; 0 dB where the
  // rotation vanishes.
  if (r.g != 0.0 && r.alpha > 0.0)
    row.s_db = squeezing_parameter(std::abs(r.g), r.alpha).s_db;
  if (std::abs(row.g_ell) < 10.0 || row.alpha_ell > 0.1)
    row.flags |= flag_g_over_alpha_low;
  if (kappa < 100.0) row.flags |= flag_kappa_regime;
  if (std::abs(r.se_rate) * cell_length >= 0.3) row.flags |= flag_se_large;
  return row;
}

// Unimodal 1D maximizer (golden section) on [lo, hi].
template <typename F>
double golden_max(F f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<ScanRow> run_sweep(const SweepSpec& spec) {
  if (spec.points < 2)
    throw std::invalid_argument("run_sweep: need at least 2 grid points");
  if (!(spec.to > spec.from))
    throw std::invalid_argument("run_sweep: empty detuning range");
  if (!std::isfinite(spec.from) || !std::isfinite(spec.to))
    throw std::invalid_argument("run_sweep: non-finite detuning range");

  if (spec.model == SweepModel::dm) {
    if (!spec.atom) throw ConfigError("dm sweep needs an atom config");
    DLineScanParams p = spec.dm_params;
    p.from = spec.from;
    p.to = spec.to;
    p.points = spec.points;
    p.cell_length_cm = spec.cell_length_cm;
    p.threads = spec.threads;
    return d_line_scan(*spec.atom, p);
  }

  std::vector<ScanRow> rows(spec.points);
  double step = (spec.to - spec.from) / (spec.points - 1);
  parallel_for(rows.size(), spec.threads, [&](std::size_t i) {
    double d = spec.from + step * static_cast<double>(i);
    rows[i] = analytic_row(spec.medium, spec.kappa, d, spec.cell_length_cm);
  });
  return rows;
}

OptimizeResult optimize_squeezing(SweepModel model,
                                  const TransitionSpec& medium, double kappa,
                                  double cell_length_cm) {
  TransitionKind kind = kind_of(model);
  if (medium.system != kind)
    throw std::invalid_argument("optimize_squeezing: medium/system mismatch");
  if (kappa < 0.0 || cell_length_cm <= 0.0)
    throw std::domain_error("optimize_squeezing: bad kappa or length");

  auto ratio_at = [&](double d) {
    MediumResponse r = response(medium, {kappa, d});
    return r.alpha > 0.0 ? std::abs(r.g) / r.alpha : 0.0;
  };

  // Coarse log scan to bracket the single positive-detuning maximum, then
  // golden section inside the bracket.
  double best_d = 0.5, best_v = -1.0;
  for (double ld = -2.0; ld <= 8.0; ld += 0.25) {
    double d = std::pow(10.0, ld);
    double v = ratio_at(d);
    if (v > best_v) {
      best_v = v;
      best_d = d;
    }
  }
  if (best_v <= 0.0)
    throw ConvergenceError("optimize_squeezing: g/alpha has no maximum (flat)");
  double d_opt = golden_max(ratio_at, best_d / std::sqrt(10.0),
                            best_d * std::sqrt(10.0), best_d * 1e-9);

  MediumResponse r = response(medium, {kappa, d_opt});
  SqueezingResult s = squeezing_parameter(std::abs(r.g), r.alpha);

  OptimizeResult out;
  out.detuning_opt = d_opt;
  out.g_over_alpha = std::abs(r.g) / r.alpha;
  out.s = s.s;
  out.s_db = s.s_db;
  // alpha scales linearly with density: pick n so alpha(d_opt) l sits at the
  // loss-model optimum.
  double alpha_per_atom = r.alpha / medium.density;
  out.density_opt =
      s.ell_opt_alpha / (alpha_per_atom * cell_length_cm);
  return out;
}

std::vector<KappaRow> kappa_scan_analytic(TransitionKind system,
                                          const KappaScanParams& params) {
  if (params.points < 2 || params.kappa_from <= 0.0 ||
      params.kappa_to <= params.kappa_from)
    throw std::invalid_argument("kappa_scan: bad kappa grid");
  TransitionSpec medium;
  medium.system = system;
  medium.gamma0 = 1.0;
  medium.gamma = 1e-3;
  medium.density = 1.0;
  medium.wavelength = 1.0;
  medium.Jg = 0.5;
  medium.Je = system == TransitionKind::x_half_half ? 0.5 : 1.5;

  std::vector<KappaRow> rows(params.points);
  double lstep = (std::log10(params.kappa_to) - std::log10(params.kappa_from)) /
                 (params.points - 1);
  for (int i = 0; i < params.points; ++i) {
    double kappa =
        std::pow(10.0, std::log10(params.kappa_from) + lstep * i);
    double d_opt = optimal_detuning(system, kappa);
    MediumResponse r = response(medium, {kappa, d_opt});
    KappaRow& row = rows[i];
    row.kappa = kappa;
    row.detuning_opt = d_opt;
    if (r.g != 0.0 && r.alpha > 0.0) {
      SqueezingResult s = squeezing_parameter(std::abs(r.g), r.alpha);
      row.s_db = s.s_db;
      if (!s.in_validity) row.flags |= flag_g_over_alpha_low;
    } else {
      row.flags |= flag_g_over_alpha_low;
    }
    if (kappa < 100.0) row.flags |= flag_kappa_regime;
  }
  return rows;
}

std::vector<KappaRow> kappa_scan_dm(const AtomConfig& atom,
                                    const DLineScanParams& base,
                                    const KappaScanParams& params) {
  if (params.points < 2 || params.kappa_from <= 0.0 ||
      params.kappa_to <= params.kappa_from)
    throw std::invalid_argument("kappa_scan: bad kappa grid");
  double kappa_base = d_line_operating_point(atom, base).kappa;
  std::vector<KappaRow> rows(params.points);
  double lstep = (std::log10(params.kappa_to) - std::log10(params.kappa_from)) /
                 (params.points - 1);
  for (int i = 0; i < params.points; ++i) {
    double kappa =
        std::pow(10.0, std::log10(params.kappa_from) + lstep * i);
    DLineScanParams p = base;
    p.power_mW = base.power_mW * kappa / kappa_base;  // kappa linear in power
    std::vector<ScanRow> scan = d_line_scan(atom, p);
    const ScanRow* best = &scan.front();
    for (const ScanRow& row : scan)
      if (row.s_db > best->s_db) best = &row;
    rows[i] = {kappa, best->detuning, best->s_db, best->flags};
  }
  return rows;
}

}  // namespace sqz
