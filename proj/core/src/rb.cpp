#include "sqz/rb.hpp"

#include <cmath>
#include <stdexcept>

#include "sqz/angular.hpp"
#include "sqz/constants.hpp"
#include "sqz/doppler.hpp"
#include "sqz/errors.hpp"
#include "sqz/parallel.hpp"
#include "sqz/quadrature.hpp"
#include "sqz/transitions.hpp"

namespace sqz {

std::string flags_to_string(std::uint32_t flags) {
  static const std::pair<std::uint32_t, const char*> names[] = {
      {flag_g_over_alpha_low, "g_over_alpha_low"},
      {flag_kappa_regime, "kappa_regime"},
      {flag_se_large, "se_large"},
      {flag_doppler_unconverged, "doppler_unconverged"},
  };
  std::string out;
  for (const auto& [bit, name] : names) {
    if (!(flags & bit)) continue;
    if (!out.empty()) out += ';';
    out += name;
  }
  return out;
}

namespace {

const LineConfig& find_line(const AtomConfig& atom,
                            const DLineScanParams& params) {
  auto it = atom.lines.find(params.line);
  if (it == atom.lines.end())
    throw ConfigError("line \"" + params.line + "\" not in " + atom.isotope +
                      " config");
  return it->second;
}

double scan_width(const LineConfig& line, const DLineScanParams& params) {
  return params.doppler_width < 0.0 ? line.doppler_width
                                    : params.doppler_width;
}

}  // namespace

DLineOperatingPoint d_line_operating_point(const AtomConfig& atom,
                                           const DLineScanParams& params) {
  const LineConfig& line = find_line(atom, params);
  DLineOperatingPoint op;
  double intensity = disk_intensity(params.power_mW * 1e-3,
                                    params.beam_diameter_cm);  // W/m^2
  op.intensity_mW_cm2 = intensity * 0.1;
  double e0 = field_from_intensity(intensity);
  double d_cg = radiative_dipole(line.gamma0, line.wavelength);
  op.rabi = d_cg * e0 / consts::hbar;
  op.temperature_K = doppler_temperature(scan_width(line, params),
                                         line.wavelength, atom.mass_amu);
  op.gamma_transit =
      transit_rate(atom.mass_amu, op.temperature_K, params.beam_diameter_cm);
  // kappa is defined on the reduced element sqrt(2Je+1) d.
  op.kappa = (2.0 * line.Je + 1.0) * op.rabi * op.rabi /
             (op.gamma_transit * line.gamma0);
  op.K = response_scale(params.density_cm3, line.wavelength, line.gamma0);
  return op;
}

std::vector<ScanRow> d_line_scan(const AtomConfig& atom,
                                 const DLineScanParams& params) {
  const LineConfig& line = find_line(atom, params);
  if (params.points < 1)
    throw std::invalid_argument("d_line_scan: points must be >= 1");
  if (params.ground_f < std::abs(atom.nuclear_spin - line.Jg) - 1e-9 ||
      params.ground_f > atom.nuclear_spin + line.Jg + 1e-9)
    throw ConfigError("ground F out of range for " + atom.isotope);

  DLineOperatingPoint op = d_line_operating_point(atom, params);
  double width = scan_width(line, params);

  // Re-reference the excited offsets to the lowest F' this ground level
  // actually couples to; the Hamiltonian's zero-detuning point must be a
  // real line of the subsystem.
  std::map<double, double> offsets;
  double lowest = 0.0;
  bool first = true;
  for (const auto& [fp, off] : line.fp_offsets) {
    if (std::abs(hyperfine_amplitude(line.Jg, line.Je, atom.nuclear_spin,
                                     params.ground_f, fp)) < 1e-12)
      continue;
    offsets[fp] = off;
    if (first || off < lowest) lowest = off;
    first = false;
  }
  if (offsets.empty())
    throw ConfigError("ground F couples to no excited level of this line");
  for (auto& [fp, off] : offsets) off -= lowest;

  LevelScheme scheme =
      make_hyperfine_scheme(line.Jg, line.Je, atom.nuclear_spin,
                            params.ground_f, offsets, op.gamma_transit,
                            line.gamma0);

  std::uint32_t base_flags = 0;
  if (op.intensity_mW_cm2 > atom.hyperfine_limit_mW_cm2)
    base_flags |= flag_kappa_regime;

  std::vector<ScanRow> rows(params.points);
  double step = params.points > 1
                    ? (params.to - params.from) / (params.points - 1)
                    : 0.0;
  if (op.rabi <= 0.0) {
    // Dark beam: nothing to rotate, every point fails the validity rule.
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i].detuning = params.from + step * static_cast<double>(i);
      rows[i].flags = base_flags | flag_g_over_alpha_low;
    }
    return rows;
  }
  parallel_for(rows.size(), params.threads, [&](std::size_t i) {
    double d = params.from + step * static_cast<double>(i);
    DriveSpec drive;
    drive.rabi = op.rabi;
    drive.detuning = d * line.gamma0;
    drive.pol_angle = consts::pi / 2.0;  // strong y, squeezed x
    DopplerResult dr =
        doppler_average(scheme, drive, op.K, width, params.gh_order);

    ScanRow& row = rows[i];
    row.detuning = d;
    row.alpha_ell = dr.response.alpha * params.cell_length_cm;
    row.g_ell = dr.response.g * params.cell_length_cm;
    row.s_db = squeeze_db_from_variance(
        lossy_min_variance(row.g_ell, std::max(row.alpha_ell, 0.0)));
    row.flags = base_flags;
    if (std::abs(row.g_ell) < 10.0 || row.alpha_ell > 0.1)
      row.flags |= flag_g_over_alpha_low;
    if (std::abs(dr.response.se_rate) * params.cell_length_cm >= 0.3 ||
        !dr.response.probe_converged)
      row.flags |= flag_se_large;
    if (!dr.converged) row.flags |= flag_doppler_unconverged;
  });
  return rows;
}

}  // namespace sqz
