#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gnorm/core.hpp"
#include "gnorm/error.hpp"

namespace gnorm {

/// B_e(x0, r) (open) or B_e[x0, r] (closed): the points y with
/// ‖x0−y, y−e, e−x0‖ < r (resp. ≤ r).
struct Ball {
  Vector center;
  Vector anchor;
  double radius = 1.0;
  bool closed = false;
};

/// Throws InputError for r ≤ 0 or dimension mismatch.
void validate(const GNormSpace& space, const Ball& ball);

/// ‖x0−y, y−e, e−x0‖.
double ball_value(const GNormSpace& space, const Ball& ball, const Vector& y);

/// Strict < for open balls, ≤ for closed; no tolerance.
bool ball_contains(const GNormSpace& space, const Ball& ball, const Vector& y);

/// r₁ = r − ‖x0−z, 0, z−x0‖, the radius for which B_e(z, r₁) ⊆ B_e(x0, r).
/// Throws PreconditionError when z is not in the open ball, or when r₁ ≤ 0
/// (possible only if the evaluator violates [N5]).
double witness_radius(const GNormSpace& space, const Ball& ball, const Vector& z);

/// Checks [y ∈ B_e(0,r)] ⇔ [y/r ∈ B_{e/r}(0,1)].
bool scaling_check(const GNormSpace& space, const Vector& e, double r, const Vector& y);

class ConvexProbeError : public PreconditionError {
 public:
  enum class Reason { x_outside, y_outside, coefficients };
  ConvexProbeError(Reason reason, const std::string& what)
      : PreconditionError(what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Whether αx + βy ∈ B_0(0,r) (or B_0[0,r] when closed), given x, y in that
/// ball and |α| + |β| ≤ 1. Throws ConvexProbeError naming the failed precondition.
bool convex_combination_probe(const GNormSpace& space, double r, const Vector& x,
                              const Vector& y, double alpha, double beta,
                              bool closed = false);

struct BallSample {
  std::vector<Vector> points;
  std::size_t attempts = 0;
  double acceptance_rate = 0.0;
  /// Set when the attempt cap was reached without a single member.
  bool empty = false;
};

/// Rejection sampling from the box centred at (x0+e)/2 with half-width r.
/// Gives up after max(1000, 200·n) attempts.
BallSample ball_sample(const GNormSpace& space, const Ball& ball, std::size_t n,
                       std::uint64_t seed);

enum class ClosureVerdictKind { inside_closed_ball, separated };

struct ClosureVerdict {
  ClosureVerdictKind kind = ClosureVerdictKind::inside_closed_ball;
  double value = 0.0;               // ‖y−a, a−e, e−y‖
  double separation_radius = 0.0;   // ε = value − r when separated
  std::size_t samples_checked = 0;  // ball members tested against B_y(y, ε)
  bool certified = true;            // no sampled member landed in B_y(y, ε)
};

ClosureVerdict closure_probe(const GNormSpace& space, const Ball& ball, const Vector& y,
                             std::size_t n_samples, std::uint64_t seed);

}  // namespace gnorm
