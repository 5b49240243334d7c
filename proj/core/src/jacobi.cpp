#include "tmsv/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tmsv {

namespace {

constexpr int kMaxSweeps = 60;

void rotate(SquareMatrix& a, SquareMatrix& v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) {
    return;
  }
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::hypot(1.0, t);
  const double s = t * c;
  const int n = a.size();
  for (int k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (int k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

Eigensystem jacobi_eigensystem(const SquareMatrix& m) {
  const int n = m.size();
  const double scale = std::max(1.0, m.max_abs());
  if (m.max_asymmetry() > kSymmetryTolerance * scale) {
    throw std::invalid_argument("jacobi_eigensystem: matrix is not symmetric");
  }

  SquareMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + m(j, i));
    }
  }
  SquareMatrix v = SquareMatrix::identity(n);

  double frob = 0.0;
  for (double x : a.data()) {
    frob += x * x;
  }
  frob = std::sqrt(frob);

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    const double off = a.off_diagonal_norm();
    if (off == 0.0 || off <= 1e-15 * frob) {
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        rotate(a, v, p, q);
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

  Eigensystem out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = SquareMatrix(n);
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.values[static_cast<std::size_t>(k)] = a(src, src);
    for (int i = 0; i < n; ++i) {
      out.vectors(i, k) = v(i, src);
    }
  }
  out.sweeps = sweep;
  out.off_diagonal_residual = a.off_diagonal_norm();
  return out;
}

}  // namespace tmsv
