#pragma once

#include <cstdint>
#include <vector>

#include "tmsv/gaussian.hpp"

namespace tmsv {

// Largest block index for which the exact Gamma sums fit in 64 bits.
inline constexpr int kMaxBlockIndex = 60;

/// Eigenvalues of one photon-number block of the partial transpose,
/// ordered by n: [xi(0, s), xi(1, s-1), ..., xi(s, 0)].
struct BlockSpectrum {
  int s = 0;
  std::vector<double> eigenvalues;
};

/// Eigenvector of block s with index n, as amplitudes on |j, s-j>, j = 0..s.
/// Signs follow the Gamma sums exactly; there is no canonicalization.
struct FockEigenvector {
  int s = 0;
  int n = 0;
  std::vector<double> coefficients;
};

/// xi(n, m) = xi * pi * (sqrt(a1)-sqrt(b1))^n / (sqrt(a1)+sqrt(b1))^(n+1)
///                   * (sqrt(a2)-sqrt(b2))^m / (sqrt(a2)+sqrt(b2))^(m+1)
double eigenvalue(const AlphaBeta& ab, double xi, int n, int m);

BlockSpectrum block_spectrum(const GaussianCoeffs& coeffs, int s);

/// sum_{k=0}^{min(j,n)} (-1)^(n-k) C(s-n, j-k) C(n, k), in exact integers.
std::int64_t gamma_coefficient(int s, int n, int j);

/// Exact binomial coefficient; 0 when k is outside [0, n].
std::int64_t binomial(int n, int k);

FockEigenvector fock_eigenvector(int s, int n);

/// Hermite-Gaussian eigenfunction phi(n, m) of the partial transpose in
/// position space, evaluated at (x, y). Holds for general alpha/beta; reduces
/// to the oscillator eigenfunctions of the rotated modes (x -/+ y)/sqrt(2)
/// when alpha1*beta1 = alpha2*beta2 = 1/16.
double position_eigenfunction(const AlphaBeta& ab, int n, int m, double x, double y);

/// d xi(n, s-n) / dt at t = 0 for a TMSV start. Requires r > 0.
double initial_eigenvalue_rate(const BathParams& bath, const SqueezeInit& init, int s, int n);

}  // namespace tmsv
