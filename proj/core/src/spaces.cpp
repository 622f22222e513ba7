#include "gnorm/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnorm/error.hpp"

namespace gnorm {
namespace {

// Sorted before adding so the result does not depend on argument order.
double symmetric_sum(double a, double b, double c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return (a + b) + c;
}

}  // namespace

double p_norm(const Vector& x, double p) {
  const double m = x.max_abs();
  if (m == 0.0) return 0.0;
  if (std::isinf(p)) return m;
  if (p == 1.0) {
    double s = 0.0;
    for (double c : x) s += std::abs(c);
    return s;
  }
  double s = 0.0;
  if (p == 2.0) {
    for (double c : x) {
      const double r = c / m;
      s += r * r;
    }
    return m * std::sqrt(s);
  }
  for (double c : x) s += std::pow(std::abs(c) / m, p);
  return m * std::pow(s, 1.0 / p);
}

GNormSpace make_sum_space(std::size_t dim, double p) {
  if (dim == 0) throw InputError("sum space: dim must be at least 1");
  if (!(p >= 1.0)) throw InputError("sum space: p must be >= 1 (got " + std::to_string(p) + ")");
  return GNormSpace(
      SpaceKind::sum_pnorm, dim,
      [p](const Vector& x, const Vector& y, const Vector& z) {
        return symmetric_sum(p_norm(x, p), p_norm(y, p), p_norm(z, p));
      },
      p, 0);
}

GNormSpace make_grid_space(std::size_t grid_size) {
  if (grid_size < 2) throw InputError("grid space: grid_size must be at least 2");
  return GNormSpace(
      SpaceKind::grid_maxsum, grid_size,
      [](const Vector& f, const Vector& g, const Vector& h) {
        double best = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
          best = std::max(best, symmetric_sum(std::abs(f[i]), std::abs(g[i]), std::abs(h[i])));
        }
        return best;
      },
      0.0, grid_size);
}

Vector sample_on_grid(std::size_t grid_size, const std::function<double(double)>& f) {
  if (grid_size < 2) throw InputError("grid_size must be at least 2");
  Vector v(grid_size);
  const double step = 1.0 / static_cast<double>(grid_size - 1);
  for (std::size_t i = 0; i < grid_size; ++i) {
    // Pin the last node to exactly 1.
    const double t = i + 1 == grid_size ? 1.0 : static_cast<double>(i) * step;
    v[i] = f(t);
  }
  return v;
}

GMetric make_rho_oracle() {
  return GMetric{"rho", 1, [](const Vector& x, const Vector& y, const Vector& z) {
                   return std::max({std::abs(x[0] - y[0]), std::abs(y[0] - z[0]),
                                    std::abs(z[0] - x[0])});
                 }};
}

GNormSpace make_max_candidate(std::size_t dim) {
  if (dim == 0) throw InputError("max candidate: dim must be at least 1");
  return GNormSpace(
      SpaceKind::max_candidate, dim,
      [](const Vector& x, const Vector& y, const Vector& z) {
        return std::max({p_norm(x, 2.0), p_norm(y, 2.0), p_norm(z, 2.0)});
      },
      2.0, 0);
}

GNormSpace make_space(const SpaceSpec& spec) {
  switch (spec.kind) {
    case SpaceKind::sum_pnorm: return make_sum_space(spec.dim, spec.p);
    case SpaceKind::grid_maxsum: return make_grid_space(spec.grid_size);
    case SpaceKind::max_candidate: return make_max_candidate(spec.dim);
    case SpaceKind::custom: break;
  }
  throw InputError("custom spaces cannot be built from a SpaceSpec");
}

}  // namespace gnorm
