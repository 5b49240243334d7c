#pragma once

#include <span>
#include <vector>

namespace tmsv {

/// Dense row-major square matrix of doubles. Small (block-sized) by intent.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, double fill = 0.0);

  static SquareMatrix identity(int n);

  int size() const { return n_; }

  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }

  std::span<const double> data() const { return data_; }

  SquareMatrix transposed() const;
  double max_abs() const;
  double max_asymmetry() const;
  double off_diagonal_norm() const;

  friend SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs);
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

double max_abs_difference(const SquareMatrix& lhs, const SquareMatrix& rhs);

}  // namespace tmsv
