#pragma once

#include <stdexcept>
#include <string>

namespace tmsv {

// A Gaussian state whose coefficients fail normalizability or positivity of
// the alpha/beta combinations.
class NonPhysicalState : public std::domain_error {
 public:
  explicit NonPhysicalState(const std::string& what) : std::domain_error(what) {}
};

// The finite Fock truncation can no longer represent the state: population
// reached the boundary or the trace drifted past the tail budget.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tmsv
