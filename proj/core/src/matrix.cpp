#include "tmsv/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tmsv {

SquareMatrix::SquareMatrix(int n, double fill) : n_(n) {
  if (n < 0) {
    throw std::invalid_argument("matrix size must be non-negative");
  }
  data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill);
}

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

SquareMatrix SquareMatrix::transposed() const {
  SquareMatrix t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      t(j, i) = (*this)(i, j);
    }
  }
  return t;
}

double SquareMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

double SquareMatrix::max_asymmetry() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    }
  }
  return m;
}

double SquareMatrix::off_diagonal_norm() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j) {
        s += (*this)(i, j) * (*this)(i, j);
      }
    }
  }
  return std::sqrt(s);
}

SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs) {
  if (lhs.n_ != rhs.n_) {
    throw std::invalid_argument("matrix size mismatch");
  }
  const int n = lhs.n_;
  SquareMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double a = lhs(i, k);
      if (a == 0.0) {
        continue;
      }
      for (int j = 0; j < n; ++j) {
        out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

double max_abs_difference(const SquareMatrix& lhs, const SquareMatrix& rhs) {
  if (lhs.size() != rhs.size()) {
    throw std::invalid_argument("matrix size mismatch");
  }
  double m = 0.0;
  const auto a = lhs.data();
  const auto b = rhs.data();
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace tmsv
