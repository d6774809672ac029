#pragma once

#include <stdexcept>
#include <string>

namespace gonbound {

// Input violates a structural rule (bad graph, bad divisor, bad decomposition).
// The CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact solver asked to run past its configured instance cap. Exit code 3.
class cap_exceeded_error : public std::runtime_error {
public:
  explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal iteration budget blown (non-convergence, runaway chip-firing).
class iteration_limit_error : public std::runtime_error {
public:
  explicit iteration_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gonbound
