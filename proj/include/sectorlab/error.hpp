#pragma once

#include <stdexcept>
#include <string>

namespace sectorlab {

/// Malformed or inconsistent user input (files, flags, parameters).
/// The CLI maps this to exit code 1.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation failed on valid input (solver breakdown, degenerate
/// portfolio). The CLI maps this to exit code 2.
struct ComputeError : std::runtime_error {
  explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sectorlab
