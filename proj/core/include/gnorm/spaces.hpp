#pragma once

#include <cstddef>
#include <functional>
#include <limits>

#include "gnorm/core.hpp"

namespace gnorm {

inline constexpr double kInfinityNorm = std::numeric_limits<double>::infinity();
inline constexpr std::size_t kDefaultGridSize = 101;

/// Configuration record for the built-in spaces.
struct SpaceSpec {
  SpaceKind kind = SpaceKind::sum_pnorm;
  std::size_t dim = 1;
  double p = 2.0;                           // sum_pnorm only
  std::size_t grid_size = kDefaultGridSize;  // grid_maxsum only

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

/// ‖x‖_p for finite p ≥ 1 or p = infinity. Scaled by the largest magnitude
/// so that homogeneity holds to rounding for extreme inputs.
double p_norm(const Vector& x, double p);

/// ‖x,y,z‖ = ‖x‖_p + ‖y‖_p + ‖z‖_p. Throws InputError for dim = 0 or p < 1.
GNormSpace make_sum_space(std::size_t dim, double p);

/// ‖f,g,h‖ = max_i (|f(t_i)| + |g(t_i)| + |h(t_i)|) over grid_size uniform
/// nodes of [0,1]. Throws InputError for grid_size < 2.
GNormSpace make_grid_space(std::size_t grid_size = kDefaultGridSize);

/// Samples f at the uniform nodes t_i = i / (grid_size − 1).
Vector sample_on_grid(std::size_t grid_size, const std::function<double(double)>& f);

/// ρ(x,y,z) = max{|x−y|, |y−z|, |z−x|} on the real line (dim 1). A G-metric
/// that is not induced by any G-norm here; used as an independent reference.
GMetric make_rho_oracle();

/// Negative control: (x,y,z) ↦ max(‖x‖₂, ‖y‖₂, ‖z‖₂). Satisfies [N1]–[N4]
/// but not the merge inequality [N5].
GNormSpace make_max_candidate(std::size_t dim);

/// Dispatches on spec.kind; throws InputError for kind = custom or invalid fields.
GNormSpace make_space(const SpaceSpec& spec);

}  // namespace gnorm
