#pragma once

// CODATA 2018 values. SI throughout; lengths elsewhere in the library are in
// cm and number densities in cm^-3 (vapor-cell conventions), so watch the
// 1e-2 factors at the boundaries.
namespace sqz::consts {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double c_light = 2.99792458e8;      // m/s
inline constexpr double eps0 = 8.8541878128e-12;     // F/m
inline constexpr double k_boltzmann = 1.380649e-23;  // J/K
inline constexpr double amu = 1.66053906660e-27;     // kg

}  // namespace sqz::consts
