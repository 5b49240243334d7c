#include "tmsv/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tmsv {

namespace {

__extension__ using int128 = __int128;

void require_block_indices(int s, int n) {
  if (s < 0 || s > kMaxBlockIndex) {
    throw std::out_of_range("block index s=" + std::to_string(s) + " outside [0, " +
                            std::to_string(kMaxBlockIndex) + "]");
  }
  if (n < 0 || n > s) {
    throw std::out_of_range("eigen index n=" + std::to_string(n) + " outside [0, s]");
  }
}

// log sqrt(j! (s-j)!) - log sqrt(2^s n! (s-n)!)
double log_fock_prefactor(int s, int n, int j) {
  return 0.5 * (std::lgamma(j + 1.0) + std::lgamma(s - j + 1.0) - s * std::log(2.0) -
                std::lgamma(n + 1.0) - std::lgamma(s - n + 1.0));
}

}  // namespace

double eigenvalue(const AlphaBeta& ab, double xi, int n, int m) {
  if (n < 0 || m < 0) {
    throw std::out_of_range("eigenvalue indices must be non-negative");
  }
  const double s1 = std::sqrt(ab.alpha1) + std::sqrt(ab.beta1);
  const double s2 = std::sqrt(ab.alpha2) + std::sqrt(ab.beta2);
  // sqrt(a) - sqrt(b) computed as (a - b) / (sqrt(a) + sqrt(b)).
  const double q1 = (ab.alpha1 - ab.beta1) / (s1 * s1);
  const double q2 = (ab.alpha2 - ab.beta2) / (s2 * s2);
  return xi * std::numbers::pi * std::pow(q1, n) / s1 * std::pow(q2, m) / s2;
}

BlockSpectrum block_spectrum(const GaussianCoeffs& coeffs, int s) {
  if (s < 0) {
    throw std::out_of_range("block index must be non-negative");
  }
  const AlphaBeta ab = alpha_beta(coeffs);
  BlockSpectrum out{s, {}};
  out.eigenvalues.reserve(static_cast<std::size_t>(s) + 1);
  for (int n = 0; n <= s; ++n) {
    out.eigenvalues.push_back(eigenvalue(ab, coeffs.xi, n, s - n));
  }
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t gamma_coefficient(int s, int n, int j) {
  require_block_indices(s, n);
  if (j < 0 || j > s) {
    throw std::out_of_range("Fock index j=" + std::to_string(j) + " outside [0, s]");
  }
  int128 sum = 0;
  for (int k = 0; k <= std::min(j, n); ++k) {
    const int128 term = static_cast<int128>(binomial(s - n, j - k)) * binomial(n, k);
    sum += ((n - k) % 2 == 0) ? term : -term;
  }
  return static_cast<std::int64_t>(sum);
}

FockEigenvector fock_eigenvector(int s, int n) {
  require_block_indices(s, n);
  FockEigenvector v{s, n, {}};
  v.coefficients.reserve(static_cast<std::size_t>(s) + 1);
  for (int j = 0; j <= s; ++j) {
    const auto gamma = static_cast<double>(gamma_coefficient(s, n, j));
    v.coefficients.push_back(gamma * std::exp(log_fock_prefactor(s, n, j)));
  }
  return v;
}

double position_eigenfunction(const AlphaBeta& ab, int n, int m, double x, double y) {
  if (n < 0 || m < 0) {
    throw std::out_of_range("eigenfunction indices must be non-negative");
  }
  const double u = (x - y) / std::sqrt(2.0);
  const double v = (x + y) / std::sqrt(2.0);
  const double c1 = std::sqrt(ab.alpha1 * ab.beta1);
  const double c2 = std::sqrt(ab.alpha2 * ab.beta2);

  // Normalized Schmidt mode: (2^(k-1) k!)^(-1/2) (c/pi)^(1/4) H_k(2 c^(1/2) w) exp(-2 c w^2).
  auto mode = [](int k, double c, double w) {
    const double log_norm = -0.5 * ((k - 1) * std::log(2.0) + std::lgamma(k + 1.0)) +
                            0.25 * std::log(c / std::numbers::pi);
    return std::exp(log_norm - 2.0 * c * w * w) *
           std::hermite(static_cast<unsigned>(k), 2.0 * std::sqrt(c) * w);
  };
  return mode(n, c1, u) * mode(m, c2, v);
}

double initial_eigenvalue_rate(const BathParams& bath, const SqueezeInit& init, int s, int n) {
  require_block_indices(s, n);
  const double r = init.r();
  if (!(r > 0.0)) {
    throw std::invalid_argument("initial_eigenvalue_rate requires r > 0");
  }
  const double g = bath.gain();
  const double l = bath.loss();
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double ch = std::cosh(r);
  const double prefactor = sign * std::pow(std::tanh(r), s) / std::sinh(r) / (ch * ch * ch);
  const double k = s - 2.0 * n;
  return prefactor * ((g - l) * k + (g + l) * k * std::cosh(2.0 * r) -
                      (l * s + g * (2.0 + s)) * std::sinh(2.0 * r));
}

}  // namespace tmsv
