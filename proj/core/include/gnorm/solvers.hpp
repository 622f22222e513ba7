#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gnorm/core.hpp"
#include "gnorm/matrix.hpp"

namespace gnorm {

using VectorMap = std::function<Vector(const Vector&)>;

/// A self-map of the space. Affine maps carry their matrix and offset so
/// inverses and preimages can be computed; black-box maps need a user-supplied
/// inverse for the expansive and Jungck solvers.
class Mapping {
 public:
  enum class Kind { affine, blackbox };

  static Mapping affine(Matrix a, Vector b);
  static Mapping blackbox(VectorMap apply);

  Kind kind() const noexcept { return kind_; }
  bool is_affine() const noexcept { return kind_ == Kind::affine; }
  const Matrix& matrix() const { return matrix_; }
  const Vector& offset() const { return offset_; }

  Vector operator()(const Vector& x) const { return apply_(x); }

  std::optional<double> known_k;
  std::optional<double> known_q;
  /// Inverse for the expansive solver, or an S-preimage oracle for Jungck
  /// (any x with S(x) = y).
  VectorMap inverse;

  Mapping& with_k(double k) {
    known_k = k;
    return *this;
  }
  Mapping& with_q(double q) {
    known_q = q;
    return *this;
  }
  Mapping& with_inverse(VectorMap inv) {
    inverse = std::move(inv);
    return *this;
  }

 private:
  Mapping(Kind kind, VectorMap apply) : kind_(kind), apply_(std::move(apply)) {}

  Kind kind_;
  VectorMap apply_;
  Matrix matrix_;
  Vector offset_;
};

struct SolveConfig {
  double tol = 1e-10;
  std::size_t max_iter = 1000;
  Vector x0;
};

/// Row n holds x_n, the step residual G(x_n, x_{n+1}, x_{n+1}) and the
/// a-priori bound k^n/(1−k)·‖x0−x1, x1−x0, 0‖.
struct IterationTrace {
  std::vector<Vector> iterates;
  std::vector<double> step_residuals;
  std::vector<double> apriori_bounds;

  std::size_t size() const noexcept { return step_residuals.size(); }
};

struct SolveReport {
  Vector fixed_point;
  std::size_t iterations = 0;
  double final_residual = 0.0;
  bool converged = false;
  bool bound_respected = true;
  IterationTrace trace;

  std::string method;
  double k_used = 0.0;
  /// k came from sampling, not from the caller. The guarantee is heuristic.
  bool k_estimated = false;
  /// Expansive solver applied to an affine map with nonzero offset.
  bool affine_extension = false;
  std::optional<double> residual_t;  // G(Tu, u, u)
  std::optional<double> residual_s;  // G(Su, u, u)
  std::optional<double> commutativity_residual;
  std::vector<std::string> notes;
};

/// Number of samples contraction_estimate uses when picard_solve has no k.
inline constexpr std::size_t kEstimateSamples = 10000;
inline constexpr double kEstimateInflation = 1.05;

/// max over sampled non-degenerate triples of
/// ‖Tx−Ty, Ty−Tz, Tz−Tx‖ / ‖x−y, y−z, z−x‖. A lower bound on the best k.
/// Throws SamplingError when every sample is degenerate.
double contraction_estimate(const GNormSpace& space, const Mapping& t, std::size_t n_samples,
                            std::uint64_t seed);

/// Picard iteration x_{n+1} = T(x_n). Stops when the step residual or the
/// a-priori bound drops to tol, or after max_iter steps. Without known_k the
/// constant is estimated (10⁴ samples, +5%) and the solver refuses if that is ≥ 1.
/// Throws InvalidConstantError for k outside [0, 1).
SolveReport picard_solve(const GNormSpace& space, const Mapping& t, const SolveConfig& cfg);

/// Fixed point of an expansive T via Picard iteration of T⁻¹ with k = 1/q.
/// Throws NotInvertibleError for a singular affine map and UnsupportedError
/// for a black box without an inverse.
SolveReport expansive_solve(const GNormSpace& space, const Mapping& t, const SolveConfig& cfg);

/// Common fixed point of a commuting pair with T(X) ⊆ S(X) via
/// x_{n+1} = S⁻¹(T(x_n)); the trace follows y_n = T(x_n). Throws
/// InvalidConstantError for q ∉ (0,1), RangeInclusionError when a preimage
/// step fails, UnsupportedError when S has no preimage oracle.
SolveReport jungck_solve(const GNormSpace& space, const Mapping& t, const Mapping& s, double q,
                         const SolveConfig& cfg);

/// G(T(u), u, u).
double fixed_point_residual(const GNormSpace& space, const Mapping& t, const Vector& u);

}  // namespace gnorm
