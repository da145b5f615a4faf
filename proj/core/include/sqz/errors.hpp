#pragma once

#include <stdexcept>
#include <string>

namespace sqz {

// Bad or inconsistent configuration input (files, units, missing keys).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numerical procedure failed to converge (quadrature doubling, probe
// limit, singular steady state, optimizer bracket).
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sqz
