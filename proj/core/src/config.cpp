#include "sqz/config.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "sqz/constants.hpp"
#include "sqz/errors.hpp"

namespace sqz {

namespace {

using nlohmann::json;

constexpr double two_pi_mhz = 2.0 * consts::pi * 1e6;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& path, const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (!known.count(key))
      fail(path, "unknown key \"" + key + "\" in " + where +
                     " (unit mismatch or typo?)");
}

double need_number(const json& obj, const std::string& key,
                   const std::string& path, const std::string& where) {
  if (!obj.contains(key)) fail(path, "missing \"" + key + "\" in " + where);
  if (!obj[key].is_number())
    fail(path, "\"" + key + "\" in " + where + " must be a number");
  return obj[key].get<double>();
}

LineConfig parse_line(const json& obj, const std::string& path,
                      const std::string& name) {
  reject_unknown(obj,
                 {"wavelength_nm", "gamma0_2pi_mhz", "Jg", "Je",
                  "fp_offsets_2pi_mhz", "doppler_width_2pi_mhz"},
                 path, "line " + name);
  LineConfig line;
  line.wavelength = need_number(obj, "wavelength_nm", path, name) * 1e-7;  // cm
  line.gamma0 = need_number(obj, "gamma0_2pi_mhz", path, name) * two_pi_mhz;
  line.Jg = need_number(obj, "Jg", path, name);
  line.Je = need_number(obj, "Je", path, name);
  line.doppler_width =
      need_number(obj, "doppler_width_2pi_mhz", path, name) * two_pi_mhz;
  if (!obj.contains("fp_offsets_2pi_mhz") ||
      !obj["fp_offsets_2pi_mhz"].is_object())
    fail(path, "line " + name + " needs an fp_offsets_2pi_mhz object");
  for (const auto& [fp_str, val] : obj["fp_offsets_2pi_mhz"].items()) {
    double fp;
    try {
      size_t used = 0;
      fp = std::stod(fp_str, &used);
      if (used != fp_str.size()) throw std::invalid_argument(fp_str);
    } catch (const std::exception&) {
      fail(path, "bad F' label \"" + fp_str + "\" in line " + name);
    }
    if (!val.is_number())
      fail(path, "F' offset for " + fp_str + " must be a number");
    line.fp_offsets[fp] = val.get<double>() * two_pi_mhz;
  }
  if (line.wavelength <= 0.0 || line.gamma0 <= 0.0)
    fail(path, "line " + name + " has non-positive wavelength or gamma0");
  return line;
}

BufferGasSpec parse_buffer(const json& obj, const std::string& path,
                           double* gamma_free) {
  reject_unknown(obj,
                 {"a1_cm3_s", "a2_rad_cm3_s", "sigma_cm2", "v_cm_s", "x_cm",
                  "gamma_free_s"},
                 path, "buffer block");
  BufferGasSpec b;
  b.a1 = need_number(obj, "a1_cm3_s", path, "buffer");
  b.a2 = need_number(obj, "a2_rad_cm3_s", path, "buffer");
  b.sigma = need_number(obj, "sigma_cm2", path, "buffer");
  b.v = need_number(obj, "v_cm_s", path, "buffer");
  b.x = need_number(obj, "x_cm", path, "buffer");
  *gamma_free = need_number(obj, "gamma_free_s", path, "buffer");
  return b;
}

}  // namespace

AtomConfig load_atom_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open");
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (!root.is_object()) fail(path, "top level must be an object");
  reject_unknown(root,
                 {"isotope", "nuclear_spin", "mass_amu", "lines",
                  "hyperfine_limit_mw_cm2", "buffer"},
                 path, "top level");

  AtomConfig cfg;
  if (!root.contains("isotope") || !root["isotope"].is_string())
    fail(path, "missing isotope string");
  cfg.isotope = root["isotope"].get<std::string>();
  cfg.nuclear_spin = need_number(root, "nuclear_spin", path, "top level");
  cfg.mass_amu = need_number(root, "mass_amu", path, "top level");
  if (root.contains("hyperfine_limit_mw_cm2"))
    cfg.hyperfine_limit_mW_cm2 =
        need_number(root, "hyperfine_limit_mw_cm2", path, "top level");

  if (!root.contains("lines") || !root["lines"].is_object() ||
      root["lines"].empty())
    fail(path, "missing non-empty lines object");
  for (const auto& [name, obj] : root["lines"].items())
    cfg.lines[name] = parse_line(obj, path, name);

  if (root.contains("buffer")) {
    cfg.has_buffer = true;
    cfg.buffer = parse_buffer(root["buffer"], path, &cfg.buffer_gamma_free);
  }
  return cfg;
}

}  // namespace sqz
