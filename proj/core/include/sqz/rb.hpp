#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqz/config.hpp"

namespace sqz {

// Row validity flags (bitmask).
enum RowFlag : std::uint32_t {
  flag_g_over_alpha_low = 1u << 0,   // g*l < 10 or alpha*l > 0.1
  flag_kappa_regime = 1u << 1,       // outside the model's kappa window
  flag_se_large = 1u << 2,           // self-elliptization not small
  flag_doppler_unconverged = 1u << 3 // quadrature doubling check failed
};

std::string flags_to_string(std::uint32_t flags);

struct ScanRow {
  double detuning = 0.0;  // gamma0 units
  double alpha_ell = 0.0;
  double g_ell = 0.0;
  double s_db = 0.0;
  std::uint32_t flags = 0;
};

struct DLineScanParams {
  std::string line = "D1";
  double ground_f = 2.0;
  double power_mW = 10.0;
  double beam_diameter_cm = 0.03;
  double density_cm3 = 1e12;
  double cell_length_cm = 10.0;
  double from = -300.0;  // detuning grid, gamma0 units
  double to = 400.0;
  int points = 141;
  int gh_order = 64;
  double doppler_width = -1.0;  // rad/s; < 0 takes the line's configured value
  int threads = 1;
};

// Doppler-averaged steady-state scan of one ground-F manifold against all
// dipole-allowed F' of the chosen line. Emits per-point alpha*l, g*l and the
// achieved squeezing in dB from the exact quadrature noise at those slab
// numbers. Detunings are measured from the lowest coupled F' component.
// Throws ConfigError when the line/F is absent from the config.
std::vector<ScanRow> d_line_scan(const AtomConfig& atom,
                                 const DLineScanParams& params);

// The scan's derived drive/medium numbers (exposed for tests and the CLI).
struct DLineOperatingPoint {
  double rabi = 0.0;           // rad/s
  double gamma_transit = 0.0;  // rad/s
  double kappa = 0.0;          // line saturation parameter
  double intensity_mW_cm2 = 0.0;
  double K = 0.0;              // propagation scale, (rad/s)/cm
  double temperature_K = 0.0;
};
DLineOperatingPoint d_line_operating_point(const AtomConfig& atom,
                                           const DLineScanParams& params);

}  // namespace sqz
