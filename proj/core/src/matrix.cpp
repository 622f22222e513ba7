#include "gnorm/matrix.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "gnorm/error.hpp"

namespace gnorm {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows_ * cols_) {
    throw InputError("matrix expects " + std::to_string(rows_ * cols_) + " entries, got " +
                     std::to_string(data_.size()));
  }
}

Matrix Matrix::identity(std::size_t n) { return scaled_identity(n, 1.0); }

Matrix Matrix::scaled_identity(std::size_t n, double alpha) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = alpha;
  return m;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) {
    throw InputError("matrix has " + std::to_string(cols_) + " columns, vector has dimension " +
                     std::to_string(x.size()));
  }
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

LuDecomposition::LuDecomposition(const Matrix& a) : n_(a.rows()), lu_(a), perm_(a.rows()) {
  if (!a.square()) throw InputError("LU decomposition needs a square matrix");
  if (n_ == 0) throw InputError("LU decomposition of an empty matrix");

  double max_row_norm = 0.0;
  for (std::size_t r = 0; r < n_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < n_; ++c) s += a(r, c) * a(r, c);
    max_row_norm = std::max(max_row_norm, std::sqrt(s));
  }
  const double threshold = 1e-12 * max_row_norm;
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});

  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n_; ++r) {
      if (std::abs(lu_(r, k)) > std::abs(lu_(pivot, k))) pivot = r;
    }
    if (!(std::abs(lu_(pivot, k)) >= threshold) || lu_(pivot, k) == 0.0) {
      throw NotInvertibleError("matrix is singular (pivot " + std::to_string(k) + ")");
    }
    if (pivot != k) {
      for (std::size_t c = 0; c < n_; ++c) std::swap(lu_(k, c), lu_(pivot, c));
      std::swap(perm_[k], perm_[pivot]);
    }
    for (std::size_t r = k + 1; r < n_; ++r) {
      const double factor = lu_(r, k) / lu_(k, k);
      lu_(r, k) = factor;
      for (std::size_t c = k + 1; c < n_; ++c) lu_(r, c) -= factor * lu_(k, c);
    }
  }
}

Vector LuDecomposition::solve(const Vector& b) const {
  if (b.size() != n_) throw InputError("right-hand side has the wrong dimension");
  Vector x(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = b[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * x[j];
    x[i] = acc;
  }
  for (std::size_t i = n_; i-- > 0;) {
    double acc = x[i];
    for (std::size_t j = i + 1; j < n_; ++j) acc -= lu_(i, j) * x[j];
    x[i] = acc / lu_(i, i);
  }
  return x;
}

Matrix LuDecomposition::inverse() const {
  Matrix inv(n_, n_);
  for (std::size_t c = 0; c < n_; ++c) {
    const Vector col = solve(Vector::unit(n_, c));
    for (std::size_t r = 0; r < n_; ++r) inv(r, c) = col[r];
  }
  return inv;
}

}  // namespace gnorm
