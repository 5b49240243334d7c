#pragma once

#include <vector>

#include "tmsv/matrix.hpp"

namespace tmsv {

/// Eigenpairs of a real symmetric matrix. Column k of `vectors` belongs to
/// values[k].
struct Eigensystem {
  std::vector<double> values;
  SquareMatrix vectors;
  int sweeps = 0;
  double off_diagonal_residual = 0.0;
};

// Matrices whose |m(i,j) - m(j,i)| exceeds this (scaled by max(1, max|m|))
// are rejected as non-symmetric.
inline constexpr double kSymmetryTolerance = 1e-12;

/// Cyclic Jacobi rotations until the off-diagonal part vanishes to rounding.
/// Values are returned in ascending order.
Eigensystem jacobi_eigensystem(const SquareMatrix& m);

}  // namespace tmsv
