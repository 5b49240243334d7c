#include "tmsv/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tmsv/error.hpp"
#include "tmsv/spectral.hpp"

namespace tmsv {

FockDensityMatrix::FockDensityMatrix(int nmax, bool partial_transpose)
    : nmax_(nmax), partial_transpose_(partial_transpose) {
  if (nmax < 0) {
    throw std::invalid_argument("nmax must be non-negative");
  }
  const auto d = static_cast<std::size_t>(dim());
  elements_.assign(d * d * d * d, 0.0);
}

double FockDensityMatrix::at_or_zero(int n, int m, int p, int q) const {
  if (n < 0 || m < 0 || p < 0 || q < 0 || n > nmax_ || m > nmax_ || p > nmax_ || q > nmax_) {
    return 0.0;
  }
  return (*this)(n, m, p, q);
}

double FockDensityMatrix::trace() const {
  double t = 0.0;
  for (int n = 0; n <= nmax_; ++n) {
    for (int m = 0; m <= nmax_; ++m) {
      t += (*this)(n, m, n, m);
    }
  }
  return t;
}

double FockDensityMatrix::boundary_population() const {
  double pop = 0.0;
  for (int k = 0; k <= nmax_; ++k) {
    pop += (*this)(nmax_, k, nmax_, k);
    if (k != nmax_) {
      pop += (*this)(k, nmax_, k, nmax_);
    }
  }
  return pop;
}

double FockDensityMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (int n = 0; n <= nmax_; ++n) {
    for (int m = 0; m <= nmax_; ++m) {
      for (int p = 0; p <= nmax_; ++p) {
        for (int q = 0; q <= nmax_; ++q) {
          worst = std::max(worst, std::abs((*this)(n, m, p, q) - (*this)(p, q, n, m)));
        }
      }
    }
  }
  return worst;
}

double max_abs_difference(const FockDensityMatrix& lhs, const FockDensityMatrix& rhs) {
  if (lhs.nmax() != rhs.nmax()) {
    throw std::invalid_argument("truncation mismatch");
  }
  const auto a = lhs.elements();
  const auto b = rhs.elements();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

FockDensityMatrix tmsv_fock_state(const SqueezeInit& init, int nmax, double tail_tol) {
  if (nmax < 1) {
    throw std::invalid_argument("tmsv_fock_state needs nmax >= 1");
  }
  const double lambda = init.lambda();
  const double tail = std::pow(lambda, 2.0 * (nmax + 1));
  if (tail > tail_tol) {
    std::ostringstream msg;
    msg << "nmax=" << nmax << " discards " << tail << " of the TMSV population (budget "
        << tail_tol << ")";
    throw std::invalid_argument(msg.str());
  }
  FockDensityMatrix rho(nmax, false);
  const double norm = 1.0 - lambda * lambda;
  for (int n = 0; n <= nmax; ++n) {
    for (int p = 0; p <= nmax; ++p) {
      rho(n, n, p, p) = norm * std::pow(lambda, n + p);
    }
  }
  return rho;
}

FockDensityMatrix thermal_fock_state(double n_thermal, int nmax, bool partial_transpose) {
  if (!(n_thermal >= 0.0)) {
    throw std::invalid_argument("thermal occupation must be >= 0");
  }
  FockDensityMatrix rho(nmax, partial_transpose);
  const double ratio = n_thermal / (n_thermal + 1.0);
  const double norm = 1.0 / ((n_thermal + 1.0) * (n_thermal + 1.0));
  for (int n = 0; n <= nmax; ++n) {
    for (int m = 0; m <= nmax; ++m) {
      rho(n, m, n, m) = norm * std::pow(ratio, n + m);
    }
  }
  return rho;
}

FockDensityMatrix partial_transpose(const FockDensityMatrix& state) {
  const int nmax = state.nmax();
  FockDensityMatrix out(nmax, !state.is_partial_transpose());
  for (int n = 0; n <= nmax; ++n) {
    for (int m = 0; m <= nmax; ++m) {
      for (int p = 0; p <= nmax; ++p) {
        for (int q = 0; q <= nmax; ++q) {
          out(n, m, p, q) = state(p, m, n, q);
        }
      }
    }
  }
  return out;
}

namespace {

// The master equation couples (n,m,p,q) only to (n+-1, m, p+-1, q) and
// (n, m+-1, p, q+-1), so the offsets n-p and m-q are conserved. Work is
// restricted to offset classes that hold a nonzero element.
struct OffsetClass {
  int dn;
  int dm;
};

std::vector<OffsetClass> active_classes(const FockDensityMatrix& state) {
  const int nmax = state.nmax();
  const int span = 2 * nmax + 1;
  std::vector<char> seen(static_cast<std::size_t>(span * span), 0);
  for (int n = 0; n <= nmax; ++n) {
    for (int m = 0; m <= nmax; ++m) {
      for (int p = 0; p <= nmax; ++p) {
        for (int q = 0; q <= nmax; ++q) {
          if (state(n, m, p, q) != 0.0) {
            seen[static_cast<std::size_t>((n - p + nmax) * span + (m - q + nmax))] = 1;
          }
        }
      }
    }
  }
  std::vector<OffsetClass> out;
  for (int dn = -nmax; dn <= nmax; ++dn) {
    for (int dm = -nmax; dm <= nmax; ++dm) {
      if (seen[static_cast<std::size_t>((dn + nmax) * span + (dm + nmax))] != 0) {
        out.push_back({dn, dm});
      }
    }
  }
  return out;
}

// One offset class laid out as a dense (n, m) grid; p = n - dn, q = m - dm.
// The four couplings of the master equation are the grid neighbours, and a
// neighbour lies inside the grid exactly when it lies inside the truncation.
struct ClassGrid {
  OffsetClass c;
  int n_lo;
  int rows;
  int m_lo;
  int cols;
};

ClassGrid make_grid(const OffsetClass& c, int nmax) {
  const int n_lo = std::max(0, c.dn);
  const int m_lo = std::max(0, c.dm);
  return {c, n_lo, std::min(nmax, nmax + c.dn) - n_lo + 1, m_lo, std::min(nmax, nmax + c.dm) - m_lo + 1};
}

// All active classes packed back to back.
struct PackedState {
  std::vector<ClassGrid> grids;
  std::vector<std::size_t> offset;
  std::size_t size = 0;
};

PackedState pack_layout(const std::vector<OffsetClass>& classes, int nmax) {
  PackedState layout;
  for (const auto& c : classes) {
    layout.grids.push_back(make_grid(c, nmax));
    layout.offset.push_back(layout.size);
    layout.size += static_cast<std::size_t>(layout.grids.back().rows) * static_cast<std::size_t>(layout.grids.back().cols);
  }
  return layout;
}

void gather(const FockDensityMatrix& state, const PackedState& layout, std::vector<double>& out) {
  out.resize(layout.size);
  for (std::size_t g = 0; g < layout.grids.size(); ++g) {
    const auto& grid = layout.grids[g];
    double* dst = out.data() + layout.offset[g];
    for (int r = 0; r < grid.rows; ++r) {
      const int n = grid.n_lo + r;
      for (int k = 0; k < grid.cols; ++k) {
        const int m = grid.m_lo + k;
        *dst++ = state(n, m, n - grid.c.dn, m - grid.c.dm);
      }
    }
  }
}

void scatter(const std::vector<double>& in, const PackedState& layout, FockDensityMatrix& state) {
  for (std::size_t g = 0; g < layout.grids.size(); ++g) {
    const auto& grid = layout.grids[g];
    const double* src = in.data() + layout.offset[g];
    for (int r = 0; r < grid.rows; ++r) {
      const int n = grid.n_lo + r;
      for (int k = 0; k < grid.cols; ++k) {
        const int m = grid.m_lo + k;
        state(n, m, n - grid.c.dn, m - grid.c.dm) = *src++;
      }
    }
  }
}

// Elementwise right-hand side; identical for rho and rho^{T_A} since it is
// symmetric under n <-> p.
void packed_rhs(const std::vector<double>& x, const PackedState& layout, const BathParams& bath,
                const std::vector<double>& root, std::vector<double>& y) {
  const double g = bath.gain();
  const double l = bath.loss();
  y.resize(layout.size);
  for (std::size_t gi = 0; gi < layout.grids.size(); ++gi) {
    const auto& grid = layout.grids[gi];
    const double* in = x.data() + layout.offset[gi];
    double* out = y.data() + layout.offset[gi];
    const auto cols = static_cast<std::ptrdiff_t>(grid.cols);
    for (int r = 0; r < grid.rows; ++r) {
      const int n = grid.n_lo + r;
      const int p = n - grid.c.dn;
      const double gain_np = 2.0 * root[static_cast<std::size_t>(n)] * root[static_cast<std::size_t>(p)];
      const double loss_np = 2.0 * root[static_cast<std::size_t>(n + 1)] * root[static_cast<std::size_t>(p + 1)];
      const double* row = in + r * cols;
      double* dst = out + r * cols;
      for (int k = 0; k < grid.cols; ++k) {
        const int m = grid.m_lo + k;
        const int q = m - grid.c.dm;
        const double v = row[k];
        const double total = n + m + p + q;
        double gain_part = -(total + 4.0) * v;
        double loss_part = -total * v;
        if (r > 0) gain_part += gain_np * row[k - cols];
        if (k > 0) {
          gain_part += 2.0 * root[static_cast<std::size_t>(m)] * root[static_cast<std::size_t>(q)] * row[k - 1];
        }
        if (r + 1 < grid.rows) loss_part += loss_np * row[k + cols];
        if (k + 1 < grid.cols) {
          loss_part += 2.0 * root[static_cast<std::size_t>(m + 1)] * root[static_cast<std::size_t>(q + 1)] * row[k + 1];
        }
        dst[k] = g * gain_part + l * loss_part;
      }
    }
  }
}

std::vector<double> sqrt_table(int nmax) {
  std::vector<double> root(static_cast<std::size_t>(nmax) + 2);
  for (std::size_t k = 0; k < root.size(); ++k) {
    root[k] = std::sqrt(static_cast<double>(k));
  }
  return root;
}

FockDensityMatrix rhs_checked(const FockDensityMatrix& state, const BathParams& bath) {
  const auto layout = pack_layout(active_classes(state), state.nmax());
  std::vector<double> x;
  std::vector<double> y;
  gather(state, layout, x);
  packed_rhs(x, layout, bath, sqrt_table(state.nmax()), y);
  FockDensityMatrix out(state.nmax(), state.is_partial_transpose());
  scatter(y, layout, out);
  return out;
}

}  // namespace

FockDensityMatrix master_rhs_pt(const FockDensityMatrix& state, const BathParams& bath) {
  if (!state.is_partial_transpose()) {
    throw std::invalid_argument("master_rhs_pt expects a partially transposed state");
  }
  return rhs_checked(state, bath);
}

FockDensityMatrix master_rhs(const FockDensityMatrix& state, const BathParams& bath) {
  if (state.is_partial_transpose()) {
    throw std::invalid_argument("master_rhs expects an un-transposed state");
  }
  return rhs_checked(state, bath);
}

double max_stable_step(const BathParams& bath, int nmax) {
  const double rate = (bath.gain() + bath.loss()) * std::max(nmax, 1);
  return rate > 0.0 ? kStabilityBound / rate : std::numeric_limits<double>::infinity();
}

FockDensityMatrix integrate(FockDensityMatrix state, const BathParams& bath, double t_final,
                            double dt, double tail_tol) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("integrate: dt must be positive");
  }
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw std::invalid_argument("integrate: t_final must be finite and >= 0");
  }
  if ((bath.gain() + bath.loss()) * state.nmax() * dt > kStabilityBound * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "integrate: dt=" << dt << " violates (G+L)*nmax*dt <= " << kStabilityBound;
    throw std::invalid_argument(msg.str());
  }
  if (t_final == 0.0) {
    return state;
  }

  const auto steps = static_cast<long>(std::ceil(t_final / dt * (1.0 - 1e-12)));
  const double h = t_final / static_cast<double>(steps);

  const int nmax = state.nmax();
  const auto layout = pack_layout(active_classes(state), nmax);
  const auto root = sqrt_table(nmax);
  std::vector<double> y, probe, k1, k2, k3, k4;
  gather(state, layout, y);
  probe.resize(y.size());

  const double trace0 = state.trace();
  for (long step = 0; step < steps; ++step) {
    packed_rhs(y, layout, bath, root, k1);
    for (std::size_t i = 0; i < y.size(); ++i) probe[i] = y[i] + 0.5 * h * k1[i];
    packed_rhs(probe, layout, bath, root, k2);
    for (std::size_t i = 0; i < y.size(); ++i) probe[i] = y[i] + 0.5 * h * k2[i];
    packed_rhs(probe, layout, bath, root, k3);
    for (std::size_t i = 0; i < y.size(); ++i) probe[i] = y[i] + h * k3[i];
    packed_rhs(probe, layout, bath, root, k4);
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
    }
    scatter(y, layout, state);

    const double boundary = state.boundary_population();
    if (boundary > tail_tol) {
      std::ostringstream msg;
      msg << "truncation failure at t=" << h * static_cast<double>(step + 1)
          << ": boundary population " << boundary << " exceeds " << tail_tol << " (nmax=" << nmax
          << ")";
      throw TruncationError(msg.str());
    }
    const double drift = std::abs(state.trace() - trace0);
    if (drift > 10.0 * tail_tol) {
      std::ostringstream msg;
      msg << "truncation failure at t=" << h * static_cast<double>(step + 1) << ": trace drift "
          << drift << " exceeds " << 10.0 * tail_tol;
      throw TruncationError(msg.str());
    }
  }
  return state;
}

int block_first_index(int s, int nmax) { return std::max(0, s - nmax); }

SquareMatrix extract_block(const FockDensityMatrix& state, int s, BlockRange range) {
  if (!state.is_partial_transpose()) {
    throw std::invalid_argument("extract_block expects a partially transposed state");
  }
  const int nmax = state.nmax();
  const int limit = range == BlockRange::Complete ? nmax : 2 * nmax;
  if (s < 0 || s > limit) {
    throw std::out_of_range("block s=" + std::to_string(s) + " outside the representable range [0, " +
                            std::to_string(limit) + "]");
  }
  const int lo = block_first_index(s, nmax);
  const int hi = std::min(s, nmax);
  SquareMatrix block(hi - lo + 1);
  for (int i = lo; i <= hi; ++i) {
    for (int k = lo; k <= hi; ++k) {
      block(i - lo, k - lo) = state(i, s - i, k, s - k);
    }
  }
  return block;
}

Eigensystem diagonalize_block(const SquareMatrix& block) { return jacobi_eigensystem(block); }

Eigensystem pair_with_fock_eigenvectors(const Eigensystem& eig, int s) {
  const int size = eig.vectors.size();
  if (size != s + 1) {
    throw std::invalid_argument("pairing needs a complete block of side s + 1");
  }
  SquareMatrix overlap(size);
  for (int n = 0; n <= s; ++n) {
    const auto ref = fock_eigenvector(s, n);
    for (int k = 0; k < size; ++k) {
      double dot = 0.0;
      for (int j = 0; j < size; ++j) {
        dot += ref.coefficients[static_cast<std::size_t>(j)] * eig.vectors(j, k);
      }
      overlap(n, k) = dot;
    }
  }

  // Greedy assignment on the largest remaining |overlap|.
  std::vector<int> column_of(static_cast<std::size_t>(size), -1);
  std::vector<char> used_row(static_cast<std::size_t>(size), 0);
  std::vector<char> used_col(static_cast<std::size_t>(size), 0);
  for (int round = 0; round < size; ++round) {
    double best = -1.0;
    int best_n = -1;
    int best_k = -1;
    for (int n = 0; n < size; ++n) {
      if (used_row[static_cast<std::size_t>(n)] != 0) continue;
      for (int k = 0; k < size; ++k) {
        if (used_col[static_cast<std::size_t>(k)] != 0) continue;
        if (std::abs(overlap(n, k)) > best) {
          best = std::abs(overlap(n, k));
          best_n = n;
          best_k = k;
        }
      }
    }
    column_of[static_cast<std::size_t>(best_n)] = best_k;
    used_row[static_cast<std::size_t>(best_n)] = 1;
    used_col[static_cast<std::size_t>(best_k)] = 1;
  }

  Eigensystem out;
  out.values.resize(static_cast<std::size_t>(size));
  out.vectors = SquareMatrix(size);
  out.sweeps = eig.sweeps;
  out.off_diagonal_residual = eig.off_diagonal_residual;
  for (int n = 0; n < size; ++n) {
    const int k = column_of[static_cast<std::size_t>(n)];
    const double sign = overlap(n, k) < 0.0 ? -1.0 : 1.0;
    out.values[static_cast<std::size_t>(n)] = eig.values[static_cast<std::size_t>(k)];
    for (int j = 0; j < size; ++j) {
      out.vectors(j, n) = sign * eig.vectors(j, k);
    }
  }
  return out;
}

FockDensityMatrix reconstruct_analytic_fock(const GaussianCoeffs& coeffs, int nmax, int smax) {
  if (smax < 0 || smax > nmax) {
    throw std::out_of_range("reconstruct_analytic_fock needs 0 <= smax <= nmax");
  }
  const AlphaBeta ab = alpha_beta(coeffs);
  FockDensityMatrix out(nmax, true);
  for (int s = 0; s <= smax; ++s) {
    for (int n = 0; n <= s; ++n) {
      const double xi = eigenvalue(ab, coeffs.xi, n, s - n);
      const auto vec = fock_eigenvector(s, n).coefficients;
      for (int j = 0; j <= s; ++j) {
        for (int k = 0; k <= s; ++k) {
          out(j, s - j, k, s - k) +=
              xi * vec[static_cast<std::size_t>(j)] * vec[static_cast<std::size_t>(k)];
        }
      }
    }
  }
  return out;
}

}  // namespace tmsv
