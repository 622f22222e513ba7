#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gnorm {

/// Element of a finite-dimensional real vector space. For the grid
/// instance, coordinate i holds f(t_i) at the i-th uniform node of [0,1].
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim, double fill = 0.0) : coords_(dim, fill) {}
  Vector(std::initializer_list<double> coords) : coords_(coords) {}
  explicit Vector(std::vector<double> coords) : coords_(std::move(coords)) {}

  static Vector zero(std::size_t dim) { return Vector(dim, 0.0); }
  static Vector unit(std::size_t dim, std::size_t axis) {
    Vector v(dim);
    v[axis] = 1.0;
    return v;
  }

  std::size_t size() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }

  double& operator[](std::size_t i) { return coords_[i]; }
  double operator[](std::size_t i) const { return coords_[i]; }

  std::span<const double> coords() const noexcept { return coords_; }
  std::span<double> coords() noexcept { return coords_; }
  const std::vector<double>& data() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  auto begin() noexcept { return coords_.begin(); }
  auto end() noexcept { return coords_.end(); }

  bool all_finite() const noexcept;
  bool is_zero() const noexcept;
  double max_abs() const noexcept;

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(double alpha) noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

Vector operator+(Vector lhs, const Vector& rhs);
Vector operator-(Vector lhs, const Vector& rhs);
Vector operator-(Vector v);
Vector operator*(double alpha, Vector v);
Vector operator*(Vector v, double alpha);

}  // namespace gnorm
