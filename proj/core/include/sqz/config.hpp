#pragma once

#include <map>
#include <string>

#include "sqz/buffer.hpp"

namespace sqz {

// One D line of the configured isotope. Internal units: cm, rad/s.
struct LineConfig {
  double wavelength = 0.0;  // cm
  double gamma0 = 0.0;      // rad/s
  double Jg = 0.5;
  double Je = 0.5;
  // F' -> offset (rad/s) from the lowest coupled component.
  std::map<double, double> fp_offsets;
  double doppler_width = 0.0;  // rad/s, k * most probable speed
};

struct AtomConfig {
  std::string isotope;
  double nuclear_spin = 0.0;
  double mass_amu = 0.0;
  std::map<std::string, LineConfig> lines;
  double hyperfine_limit_mW_cm2 = 3.0e4;  // validity ceiling for the scan
  bool has_buffer = false;
  BufferGasSpec buffer;
  double buffer_gamma_free = 0.0;  // rad/s, buffer-free ground relaxation
};

// Strict JSON loader: unknown keys are configuration errors, units are
// encoded in key names (e.g. *_2pi_mhz, *_nm) and converted here, so a file
// in the wrong unit system cannot parse quietly. Throws ConfigError.
AtomConfig load_atom_config(const std::string& path);

}  // namespace sqz
