#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "sqz/rb.hpp"
#include "sqz/sweep.hpp"

namespace sqz {

enum class OutputFormat { csv, json };

// Key/value pairs echoed into the JSON metadata block (insertion order kept).
struct RunMetadata {
  std::string model;
  std::vector<std::pair<std::string, std::string>> parameters;
};

// Detuning-scan table. CSV column set and order are part of the output
// contract: detuning_gamma0,alpha_ell,g_ell,squeezing_db,flags.
// Numbers are printed with %.9g so identical inputs give identical bytes.
void emit_rows(std::ostream& os, const std::vector<ScanRow>& rows,
               OutputFormat format, const RunMetadata& meta);

// Kappa-scan table: log10_kappa,detuning_gamma0,squeezing_db,flags plus the
// kappa grid itself in the JSON metadata.
void emit_kappa_rows(std::ostream& os, const std::vector<KappaRow>& rows,
                     OutputFormat format, const RunMetadata& meta);

// Generic numeric table (quadrature/buffer subcommands); columns must have
// equal length.
void emit_table(std::ostream& os, const std::vector<std::string>& names,
                const std::vector<std::vector<double>>& columns,
                OutputFormat format, const RunMetadata& meta);

void emit_xy(std::ostream& os, const std::string& xname,
             const std::string& yname, const std::vector<double>& x,
             const std::vector<double>& y, OutputFormat format,
             const RunMetadata& meta);

std::string format_double(double v);  // %.9g

}  // namespace sqz
