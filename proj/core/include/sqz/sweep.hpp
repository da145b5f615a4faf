#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqz/config.hpp"
#include "sqz/rb.hpp"
#include "sqz/transitions.hpp"

namespace sqz {

enum class SweepModel { analytic_x, analytic_d2, dm };

// Grid + medium for one detuning sweep. For the analytic models the
// squeezing column is the length-optimized value from g/alpha; for dm it is
// the achieved value at the given density and cell length.
struct SweepSpec {
  SweepModel model = SweepModel::analytic_x;
  double from = -10.0;  // gamma0 units
  double to = 10.0;
  int points = 101;
  double kappa = 0.0;             // analytic models
  TransitionSpec medium;          // analytic models
  double cell_length_cm = 10.0;
  std::optional<AtomConfig> atom; // dm model
  DLineScanParams dm_params;      // dm model
  int threads = 1;
};

std::vector<ScanRow> run_sweep(const SweepSpec& spec);

// Detuning maximizing g/alpha (golden section on the bracket from a coarse
// scan), then the density putting alpha*l at the loss-model optimum.
struct OptimizeResult {
  double detuning_opt = 0.0;  // gamma0 units
  double density_opt = 0.0;   // cm^-3
  double s = 1.0;
  double s_db = 0.0;
  double g_over_alpha = 0.0;
};
OptimizeResult optimize_squeezing(SweepModel model, const TransitionSpec& medium,
                                  double kappa, double cell_length_cm);

// Per-kappa detuning-optimized squeezing for the analytic systems (the
// dm variant maps kappa to a drive strength through the configured line).
struct KappaScanParams {
  double kappa_from = 1e4;
  double kappa_to = 1e8;
  int points = 9;  // log-spaced
};
struct KappaRow {
  double kappa = 0.0;
  double detuning_opt = 0.0;
  double s_db = 0.0;
  std::uint32_t flags = 0;
};
std::vector<KappaRow> kappa_scan_analytic(TransitionKind system,
                                          const KappaScanParams& params);
std::vector<KappaRow> kappa_scan_dm(const AtomConfig& atom,
                                    const DLineScanParams& base,
                                    const KappaScanParams& params);

}  // namespace sqz
