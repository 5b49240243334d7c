#pragma once

#include <iosfwd>
#include <random>
#include <vector>

#include "tmsv/fock.hpp"
#include "tmsv/matrix.hpp"

namespace tmsv {

/// One nonzero slot of W(s, n): value = <l, s-j| W |j, s-l>.
struct WitnessEntry {
  int j = 0;
  int l = 0;
  double value = 0.0;
};

/// Sub-block of W(s, n) with characteristic difference k = s - j - l.
/// It acts on the states |l, k+l> for l = first_l .. first_l + size - 1;
/// matrix(a, b) = <first_l+a, k+first_l+a| W |first_l+b, k+first_l+b>.
struct WitnessBlock {
  int k = 0;
  int first_l = 0;
  SquareMatrix matrix;
};

/// Partial transpose of the projector onto the block-s eigenvector with
/// index n. Only odd n gives an entanglement witness; even n is
/// constructible but reports is_witness() == false.
class WitnessOperator {
 public:
  int s() const { return s_; }
  int n() const { return n_; }
  bool is_witness() const { return n_ % 2 == 1; }
  const std::vector<WitnessEntry>& entries() const { return entries_; }

  /// <ket_a, ket_b| W |bra_a, bra_b>; zero off the support.
  double element(int ket_a, int ket_b, int bra_a, int bra_b) const;

  /// Dense four-index embedding, element (n, m, p, q) = <n, m| W |p, q>.
  FockDensityMatrix to_fock_array(int nmax) const;

 private:
  friend WitnessOperator build_witness(int s, int n);
  int s_ = 0;
  int n_ = 0;
  std::vector<WitnessEntry> entries_;
};

WitnessOperator build_witness(int s, int n);

/// The 2s+1 blocks, ordered k = -s .. s.
std::vector<WitnessBlock> witness_blocks(const WitnessOperator& w);

/// Tr(rho W) for an un-transposed rho whose truncation covers block s.
double expectation(const FockDensityMatrix& state, const WitnessOperator& w);

/// "# S=<s>,n=<n>" line, "j,l,value" header, one row per entry.
void write_witness_csv(std::ostream& out, const WitnessOperator& w);

struct WitnessTable {
  int s = 0;
  int n = 0;
  std::vector<WitnessEntry> entries;
};

WitnessTable read_witness_csv(std::istream& in);

/// Real part of a random two-mode product state truncated at nmax. Each mode
/// is independently a coherent state (|alpha| <= 2), a thermal state
/// (mean occupation in [0, 2]) or a number state, renormalized after
/// truncation. Separable by construction.
FockDensityMatrix random_product_state(std::mt19937_64& rng, int nmax);

}  // namespace tmsv
