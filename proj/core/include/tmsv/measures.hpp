#pragma once

#include <optional>
#include <vector>

#include "tmsv/fock.hpp"
#include "tmsv/gaussian.hpp"

namespace tmsv {

struct BlockNegativity {
  int s = 0;
  double value = 0.0;
};

struct NegativityReport {
  double t = 0.0;
  double total = 0.0;
  std::vector<BlockNegativity> per_block;
  std::optional<double> numeric_total;
};

/// Sum of |negative eigenvalues| of rho^{T_A} in closed form, clamped at 0
/// once the state is separable.
double negativity(const GaussianCoeffs& coeffs);

/// Negativity restricted to block s (sum over odd n of -xi(n, s-n)), clamped at 0.
double sub_negativity(const GaussianCoeffs& coeffs, int s);

/// Brute-force negativity: Jacobi-diagonalize every block s <= smax of a
/// partially transposed Fock state and sum the negative eigenvalues.
double numerical_negativity(const FockDensityMatrix& state, int smax);

NegativityReport negativity_report(const GaussianCoeffs& coeffs, double t, int smax);

}  // namespace tmsv
