#include "tmsv/witness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <complex>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tmsv/format.hpp"
#include "tmsv/spectral.hpp"

namespace tmsv {

double WitnessOperator::element(int ket_a, int ket_b, int bra_a, int bra_b) const {
  // Support: ket = |l, s-j>, bra = <j, s-l>.
  const int l = ket_a;
  const int j = bra_a;
  if (l < 0 || j < 0 || l > s_ || j > s_ || ket_b != s_ - j || bra_b != s_ - l) {
    return 0.0;
  }
  return entries_[static_cast<std::size_t>(j * (s_ + 1) + l)].value;
}

FockDensityMatrix WitnessOperator::to_fock_array(int nmax) const {
  if (nmax < s_) {
    throw std::out_of_range("to_fock_array: nmax must cover block s");
  }
  FockDensityMatrix out(nmax, false);
  for (const auto& e : entries_) {
    out(e.l, s_ - e.j, e.j, s_ - e.l) = e.value;
  }
  return out;
}

WitnessOperator build_witness(int s, int n) {
  if (s < 0 || s > kMaxBlockIndex || n < 0 || n > s) {
    throw std::out_of_range("build_witness needs 0 <= n <= s <= " + std::to_string(kMaxBlockIndex));
  }
  std::vector<double> gamma(static_cast<std::size_t>(s) + 1);
  std::vector<double> log_fact(static_cast<std::size_t>(s) + 1);
  for (int j = 0; j <= s; ++j) {
    gamma[static_cast<std::size_t>(j)] = static_cast<double>(gamma_coefficient(s, n, j));
    log_fact[static_cast<std::size_t>(j)] = std::lgamma(j + 1.0) + std::lgamma(s - j + 1.0);
  }
  const double log_den = s * std::log(2.0) + std::lgamma(n + 1.0) + std::lgamma(s - n + 1.0);

  WitnessOperator w;
  w.s_ = s;
  w.n_ = n;
  w.entries_.reserve(static_cast<std::size_t>((s + 1) * (s + 1)));
  for (int j = 0; j <= s; ++j) {
    for (int l = 0; l <= s; ++l) {
      const auto uj = static_cast<std::size_t>(j);
      const auto ul = static_cast<std::size_t>(l);
      const double magnitude = std::exp(0.5 * (log_fact[uj] + log_fact[ul]) - log_den);
      w.entries_.push_back({j, l, gamma[uj] * gamma[ul] * magnitude});
    }
  }
  return w;
}

std::vector<WitnessBlock> witness_blocks(const WitnessOperator& w) {
  const int s = w.s();
  std::vector<WitnessBlock> blocks;
  blocks.reserve(static_cast<std::size_t>(2 * s + 1));
  for (int k = -s; k <= s; ++k) {
    const int first = std::max(0, -k);
    const int last = std::min(s, s - k);
    WitnessBlock block{k, first, SquareMatrix(last - first + 1)};
    for (int l = first; l <= last; ++l) {
      const int j = s - k - l;
      block.matrix(l - first, j - first) = w.element(l, k + l, j, k + j);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

double expectation(const FockDensityMatrix& state, const WitnessOperator& w) {
  if (state.is_partial_transpose()) {
    throw std::invalid_argument("expectation expects the un-transposed density matrix");
  }
  if (state.nmax() < w.s()) {
    throw std::out_of_range("state truncation nmax=" + std::to_string(state.nmax()) +
                            " does not cover witness block s=" + std::to_string(w.s()));
  }
  const int s = w.s();
  double total = 0.0;
  for (const auto& e : w.entries()) {
    // Tr(rho |l,s-j><j,s-l|) = <j,s-l| rho |l,s-j>
    total += e.value * state(e.j, s - e.l, e.l, s - e.j);
  }
  return total;
}

void write_witness_csv(std::ostream& out, const WitnessOperator& w) {
  out << "# S=" << w.s() << ",n=" << w.n() << "\n";
  out << "j,l,value\n";
  for (const auto& e : w.entries()) {
    out << e.j << ',' << e.l << ',' << format_real(e.value) << '\n';
  }
}

WitnessTable read_witness_csv(std::istream& in) {
  WitnessTable table;
  std::string line;
  if (!std::getline(in, line) || std::sscanf(line.c_str(), "# S=%d,n=%d", &table.s, &table.n) != 2) {
    throw std::runtime_error("witness csv: missing '# S=..,n=..' line");
  }
  if (!std::getline(in, line) || line != "j,l,value") {
    throw std::runtime_error("witness csv: missing 'j,l,value' header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    WitnessEntry e;
    std::istringstream row(line);
    char c1 = 0;
    char c2 = 0;
    if (!(row >> e.j >> c1 >> e.l >> c2 >> e.value) || c1 != ',' || c2 != ',') {
      throw std::runtime_error("witness csv: malformed row '" + line + "'");
    }
    table.entries.push_back(e);
  }
  return table;
}

namespace {

using Amplitudes = std::vector<std::complex<double>>;
using ModeMatrix = std::vector<std::complex<double>>;  // row-major (nmax+1)^2

ModeMatrix pure(const Amplitudes& c) {
  const std::size_t d = c.size();
  ModeMatrix rho(d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      rho[a * d + b] = c[a] * std::conj(c[b]);
    }
  }
  return rho;
}

ModeMatrix random_mode(std::mt19937_64& rng, int nmax) {
  const auto d = static_cast<std::size_t>(nmax) + 1;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double pick = unit(rng);
  if (pick < 0.4) {
    const double radius = 2.0 * std::sqrt(unit(rng));
    const double phase = 2.0 * std::numbers::pi * unit(rng);
    const std::complex<double> alpha = std::polar(radius, phase);
    Amplitudes c(d);
    c[0] = 1.0;
    for (std::size_t k = 1; k < d; ++k) {
      c[k] = c[k - 1] * alpha / std::sqrt(static_cast<double>(k));
    }
    double norm = 0.0;
    for (const auto& v : c) norm += std::norm(v);
    for (auto& v : c) v /= std::sqrt(norm);
    return pure(c);
  }
  ModeMatrix rho(d * d);
  if (pick < 0.8) {
    const double mean = 2.0 * unit(rng);
    const double ratio = mean / (mean + 1.0);
    double norm = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      rho[k * d + k] = std::pow(ratio, static_cast<double>(k));
      norm += rho[k * d + k].real();
    }
    for (std::size_t k = 0; k < d; ++k) rho[k * d + k] /= norm;
    return rho;
  }
  std::uniform_int_distribution<std::size_t> level(0, d - 1);
  const std::size_t k = level(rng);
  rho[k * d + k] = 1.0;
  return rho;
}

}  // namespace

FockDensityMatrix random_product_state(std::mt19937_64& rng, int nmax) {
  const ModeMatrix a = random_mode(rng, nmax);
  const ModeMatrix b = random_mode(rng, nmax);
  const auto d = static_cast<std::size_t>(nmax) + 1;
  FockDensityMatrix rho(nmax, false);
  for (int n = 0; n <= nmax; ++n) {
    for (int m = 0; m <= nmax; ++m) {
      for (int p = 0; p <= nmax; ++p) {
        for (int q = 0; q <= nmax; ++q) {
          const auto un = static_cast<std::size_t>(n);
          const auto um = static_cast<std::size_t>(m);
          const auto up = static_cast<std::size_t>(p);
          const auto uq = static_cast<std::size_t>(q);
          rho(n, m, p, q) = (a[un * d + up] * b[um * d + uq]).real();
        }
      }
    }
  }
  return rho;
}

}  // namespace tmsv
