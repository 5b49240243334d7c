#include "tmsv/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>


namespace tmsv {

double negativity(const GaussianCoeffs& coeffs) {
  const AlphaBeta ab = alpha_beta(coeffs);
  const double value = std::numbers::pi * coeffs.xi / 8.0 *
                       (1.0 / std::sqrt(ab.alpha1 * ab.beta2) - 1.0 / std::sqrt(ab.beta1 * ab.beta2));
  return std::max(value, 0.0);
}

double sub_negativity(const GaussianCoeffs& coeffs, int s) {
  if (s < 0) {
    throw std::out_of_range("block index must be non-negative");
  }
  if (s == 0) {
    return 0.0;
  }
  const AlphaBeta ab = alpha_beta(coeffs);
  const double sum1 = std::sqrt(ab.alpha1) + std::sqrt(ab.beta1);
  const double sum2 = std::sqrt(ab.alpha2) + std::sqrt(ab.beta2);
  const double diff1 = (ab.alpha1 - ab.beta1) / sum1;
  const double diff2 = (ab.alpha2 - ab.beta2) / sum2;
  const int last = (s - 1) / 2;
  double acc = 0.0;
  for (int k = 0; k <= last; ++k) {
    acc += std::pow(diff1, 2 * k + 1) / std::pow(sum1, 2 * k + 2) * std::pow(diff2, s - 2 * k - 1) /
           std::pow(sum2, s - 2 * k);
  }
  return std::max(-std::numbers::pi * coeffs.xi * acc, 0.0);
}

double numerical_negativity(const FockDensityMatrix& state, int smax) {
  double total = 0.0;
  for (int s = 0; s <= smax; ++s) {
    const Eigensystem eig = diagonalize_block(extract_block(state, s));
    for (double v : eig.values) {
      total += std::max(-v, 0.0);
    }
  }
  return total;
}

NegativityReport negativity_report(const GaussianCoeffs& coeffs, double t, int smax) {
  NegativityReport report;
  report.t = t;
  report.total = negativity(coeffs);
  report.per_block.reserve(static_cast<std::size_t>(std::max(smax + 1, 0)));
  for (int s = 0; s <= smax; ++s) {
    report.per_block.push_back({s, sub_negativity(coeffs, s)});
  }
  return report;
}

}  // namespace tmsv
