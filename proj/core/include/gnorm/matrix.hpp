#pragma once

#include <cstddef>
#include <vector>

#include "gnorm/vector.hpp"

namespace gnorm {

/// Dense row-major matrix, sized for the small affine maps the solvers use.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  /// Throws InputError when values.size() != rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);

  static Matrix identity(std::size_t n);
  static Matrix scaled_identity(std::size_t n, double alpha);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<double>& row_major() const noexcept { return data_; }

  Vector apply(const Vector& x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// LU factorization with partial pivoting. A pivot is declared singular when
/// its magnitude falls below 1e-12 times the largest row norm of the input.
class LuDecomposition {
 public:
  /// Throws NotInvertibleError on a singular pivot, InputError if not square.
  explicit LuDecomposition(const Matrix& a);

  Vector solve(const Vector& b) const;
  Matrix inverse() const;

 private:
  std::size_t n_;
  Matrix lu_;
  std::vector<std::size_t> perm_;
};

}  // namespace gnorm
