#pragma once

#include <span>
#include <vector>

#include "tmsv/gaussian.hpp"
#include "tmsv/jacobi.hpp"
#include "tmsv/matrix.hpp"

namespace tmsv {

// Default truncation-loss budget for Fock-space states.
inline constexpr double kDefaultTailTol = 1e-8;

// Upper bound on (G + L) * nmax * dt for the fixed-step integrator.
inline constexpr double kStabilityBound = 0.05;

/// Truncated two-mode operator in the Fock basis, element (n, m, p, q) =
/// <n, m| rho |p, q> with every index in [0, nmax]. Dense row-major storage.
///
/// The partial-transpose tag records whether the array holds rho or
/// rho^{T_A}; it is carried along but never inferred from the data.
class FockDensityMatrix {
 public:
  FockDensityMatrix() = default;
  explicit FockDensityMatrix(int nmax, bool partial_transpose = false);

  int nmax() const { return nmax_; }
  int dim() const { return nmax_ + 1; }
  bool is_partial_transpose() const { return partial_transpose_; }
  void set_partial_transpose(bool value) { partial_transpose_ = value; }

  std::size_t index(int n, int m, int p, int q) const {
    const auto d = static_cast<std::size_t>(dim());
    return ((static_cast<std::size_t>(n) * d + static_cast<std::size_t>(m)) * d +
            static_cast<std::size_t>(p)) * d + static_cast<std::size_t>(q);
  }

  double operator()(int n, int m, int p, int q) const { return elements_[index(n, m, p, q)]; }
  double& operator()(int n, int m, int p, int q) { return elements_[index(n, m, p, q)]; }

  // Zero for any index outside [0, nmax].
  double at_or_zero(int n, int m, int p, int q) const;

  std::span<const double> elements() const { return elements_; }
  std::span<double> elements() { return elements_; }

  /// Sum of the diagonal <n,m|.|n,m> (identical for rho and rho^{T_A}).
  double trace() const;

  /// Diagonal weight on states with either photon number at nmax.
  double boundary_population() const;

  /// max |X(n,m,p,q) - X(p,q,n,m)|.
  double max_asymmetry() const;

 private:
  int nmax_ = 0;
  bool partial_transpose_ = false;
  std::vector<double> elements_;
};

double max_abs_difference(const FockDensityMatrix& lhs, const FockDensityMatrix& rhs);

/// Un-transposed rho of the two-mode squeezed vacuum truncated at nmax.
/// Rejects nmax whose discarded tail lambda^(2(nmax+1)) exceeds tail_tol.
FockDensityMatrix tmsv_fock_state(const SqueezeInit& init, int nmax,
                                  double tail_tol = kDefaultTailTol);

/// Product of two thermal states with mean occupation n_thermal (diagonal,
/// hence identical with or without partial transposition).
FockDensityMatrix thermal_fock_state(double n_thermal, int nmax, bool partial_transpose = false);

/// (n, m, p, q) -> (p, m, n, q); toggles the tag.
FockDensityMatrix partial_transpose(const FockDensityMatrix& state);

/// Time derivative of rho^{T_A} under the gain/loss master equation.
/// Neighbours beyond nmax are treated as zero.
FockDensityMatrix master_rhs_pt(const FockDensityMatrix& state, const BathParams& bath);

/// Time derivative of the un-transposed rho under the same master equation.
FockDensityMatrix master_rhs(const FockDensityMatrix& state, const BathParams& bath);

/// Largest dt allowed by the stability rule (G + L) * nmax * dt <= 0.05.
double max_stable_step(const BathParams& bath, int nmax);

/// Classical RK4 with steps no larger than dt, on either rho or rho^{T_A}.
///
/// Throws TruncationError once the boundary population exceeds tail_tol or
/// the trace drifts by more than 10 * tail_tol.
FockDensityMatrix integrate(FockDensityMatrix state, const BathParams& bath, double t_final,
                            double dt, double tail_tol = kDefaultTailTol);

enum class BlockRange {
  Complete,   // s <= nmax: every |n, s-n> is representable
  Truncated,  // s <= 2 nmax: only the representable part of the block
};

/// First photon number n of the basis pairs {n, s-n} held in block s.
int block_first_index(int s, int nmax);

/// Block M_s of rho^{T_A}: entry (i, k) = rho^{T_A}(n_i, s-n_i, n_k, s-n_k).
SquareMatrix extract_block(const FockDensityMatrix& state, int s,
                           BlockRange range = BlockRange::Complete);

/// Full eigensystem of a symmetric block.
Eigensystem diagonalize_block(const SquareMatrix& block);

/// Reorders columns so that column n has maximal overlap with
/// fock_eigenvector(s, n), flipping signs to make that overlap positive.
Eigensystem pair_with_fock_eigenvectors(const Eigensystem& eig, int s);

/// rho^{T_A} assembled from the closed-form spectrum, blocks s <= smax.
FockDensityMatrix reconstruct_analytic_fock(const GaussianCoeffs& coeffs, int nmax, int smax);

}  // namespace tmsv
