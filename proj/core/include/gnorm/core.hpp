#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "gnorm/vector.hpp"

namespace gnorm {

/// Base tolerance for inequality checks; scaled by max(1, operand magnitude).
inline constexpr double kBaseTolerance = 1e-9;

/// τ = 1e-9 · max(1, largest magnitude among the given operand norms).
double tolerance(std::initializer_list<double> magnitudes);
double tolerance_for(double magnitude);

enum class SpaceKind { sum_pnorm, grid_maxsum, max_candidate, custom };

std::string to_string(SpaceKind kind);
/// Throws InputError for unknown names.
SpaceKind space_kind_from_string(const std::string& name);

/// Raw evaluator over validated coordinates of equal length.
using TripleEvaluator = std::function<double(const Vector&, const Vector&, const Vector&)>;

/// A real vector space of fixed dimension with a function of triples that is
/// meant to be a G-norm. The built-in constructors live in spaces.hpp;
/// whether a given evaluator really satisfies the axioms is the job of
/// verify.hpp, not of this class.
class GNormSpace {
 public:
  GNormSpace(SpaceKind kind, std::size_t dim, TripleEvaluator evaluator,
             double p = 0.0, std::size_t grid_size = 0);

  SpaceKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }
  /// p of the sum-of-p-norms instance (infinity for the max norm); 0 otherwise.
  double p() const noexcept { return p_; }
  std::size_t grid_size() const noexcept { return grid_size_; }

  /// ‖x,y,z‖. Throws InputError on dimension mismatch or non-finite input.
  double eval(const Vector& x, const Vector& y, const Vector& z) const;

  /// Throws InputError unless v has this space's dimension and finite entries.
  void check(const Vector& v, const char* what = "vector") const;

  Vector zero() const { return Vector::zero(dim_); }

 private:
  SpaceKind kind_;
  std::size_t dim_;
  double p_;
  std::size_t grid_size_;
  TripleEvaluator evaluator_;
};

/// A G-metric on vectors of a fixed dimension. Either derived from a
/// GNormSpace or supplied directly (e.g. the max-of-pairwise-distances
/// reference on the real line).
struct GMetric {
  std::string name;
  std::size_t dim = 1;
  TripleEvaluator fn;

  /// Validates dimension and finiteness, then evaluates.
  double operator()(const Vector& x, const Vector& y, const Vector& z) const;
};

double gnorm_eval(const GNormSpace& space, const Vector& x, const Vector& y, const Vector& z);

/// ‖x,0,0‖.
double induced_norm(const GNormSpace& space, const Vector& x);

/// G(x,y,z) = ‖x−y, y−z, z−x‖.
double derived_gmetric(const GNormSpace& space, const Vector& x, const Vector& y,
                       const Vector& z);

GMetric derived_gmetric_of(const GNormSpace& space);

/// d_G(x,y) = G(x,y,y) + G(x,x,y).
double dg_metric(const GNormSpace& space, const Vector& x, const Vector& y);

/// ‖x−u,y−v,z−w‖ − |‖x,y,z‖ − ‖u,v,w‖|; non-negative for a valid G-norm.
double reverse_gap(const GNormSpace& space, const Vector& x, const Vector& y, const Vector& z,
                   const Vector& u, const Vector& v, const Vector& w);

/// A finite stretch x_s, x_{s+1}, ... of a sequence.
struct SequenceWindow {
  std::vector<Vector> points;
  std::size_t start_index = 0;
};

/// max_n ‖x_n−x, x_n−x, x_n−x‖ over the window.
double convergence_residual(const GNormSpace& space, const SequenceWindow& window,
                            const Vector& candidate_limit);

enum class CauchyMode {
  exact,           // max over all index triples, O(w³)
  pairwise_bound,  // two-term upper envelope, O(w²)
  automatic,       // exact up to kCauchyExactLimit points
};

inline constexpr std::size_t kCauchyExactLimit = 32;

/// Throws InputError if the window has fewer than two points.
double cauchy_residual(const GNormSpace& space, const SequenceWindow& window,
                       CauchyMode mode = CauchyMode::automatic);

}  // namespace gnorm
