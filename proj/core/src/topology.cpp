#include "gnorm/topology.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnorm/random.hpp"

namespace gnorm {

void validate(const GNormSpace& space, const Ball& ball) {
  if (!(ball.radius > 0.0) || !std::isfinite(ball.radius)) {
    throw InputError("ball radius must be positive and finite");
  }
  space.check(ball.center, "ball center");
  space.check(ball.anchor, "ball anchor");
}

double ball_value(const GNormSpace& space, const Ball& ball, const Vector& y) {
  space.check(y, "point");
  return space.eval(ball.center - y, y - ball.anchor, ball.anchor - ball.center);
}

bool ball_contains(const GNormSpace& space, const Ball& ball, const Vector& y) {
  validate(space, ball);
  const double v = ball_value(space, ball, y);
  return ball.closed ? v <= ball.radius : v < ball.radius;
}

double witness_radius(const GNormSpace& space, const Ball& ball, const Vector& z) {
  validate(space, ball);
  if (!(ball_value(space, ball, z) < ball.radius)) {
    throw PreconditionError("witness_radius: point is not inside the open ball");
  }
  const Vector d = ball.center - z;
  const double r1 = ball.radius - space.eval(d, space.zero(), -d);
  if (!(r1 > 0.0)) {
    throw PreconditionError("witness_radius: non-positive radius; evaluator breaks [N5]");
  }
  return r1;
}

bool scaling_check(const GNormSpace& space, const Vector& e, double r, const Vector& y) {
  if (!(r > 0.0)) throw InputError("scaling_check: r must be positive");
  const Vector zero = space.zero();
  const bool original = ball_contains(space, Ball{zero, e, r, false}, y);
  const bool rescaled = ball_contains(space, Ball{zero, (1.0 / r) * e, 1.0, false}, (1.0 / r) * y);
  return original == rescaled;
}

bool convex_combination_probe(const GNormSpace& space, double r, const Vector& x,
                              const Vector& y, double alpha, double beta, bool closed) {
  if (!(r > 0.0)) throw InputError("convex_combination_probe: r must be positive");
  const Vector zero = space.zero();
  const Ball ball{zero, zero, r, closed};
  using Reason = ConvexProbeError::Reason;
  if (!ball_contains(space, ball, x)) {
    throw ConvexProbeError(Reason::x_outside, "convex_combination_probe: x is outside B_0(0,r)");
  }
  if (!ball_contains(space, ball, y)) {
    throw ConvexProbeError(Reason::y_outside, "convex_combination_probe: y is outside B_0(0,r)");
  }
  if (!std::isfinite(alpha) || !std::isfinite(beta) || std::abs(alpha) + std::abs(beta) > 1.0) {
    throw ConvexProbeError(Reason::coefficients,
                           "convex_combination_probe: |alpha| + |beta| must not exceed 1");
  }
  return ball_contains(space, ball, alpha * x + beta * y);
}

BallSample ball_sample(const GNormSpace& space, const Ball& ball, std::size_t n,
                       std::uint64_t seed) {
  validate(space, ball);
  if (n == 0) throw InputError("ball_sample: n must be at least 1");
  const Vector box_center = 0.5 * (ball.center + ball.anchor);
  const std::size_t cap = std::max<std::size_t>(1000, 200 * n);

  BallSample out;
  SplitMix64 rng(seed);
  while (out.points.size() < n && out.attempts < cap) {
    ++out.attempts;
    Vector y = uniform_box_vector(rng, box_center, ball.radius);
    if (ball_contains(space, ball, y)) out.points.push_back(std::move(y));
  }
  out.acceptance_rate =
      static_cast<double>(out.points.size()) / static_cast<double>(out.attempts);
  out.empty = out.points.empty();
  return out;
}

ClosureVerdict closure_probe(const GNormSpace& space, const Ball& ball, const Vector& y,
                             std::size_t n_samples, std::uint64_t seed) {
  validate(space, ball);
  ClosureVerdict verdict;
  verdict.value = ball_value(space, ball, y);
  if (verdict.value <= ball.radius) {
    verdict.kind = ClosureVerdictKind::inside_closed_ball;
    return verdict;
  }
  verdict.kind = ClosureVerdictKind::separated;
  verdict.separation_radius = verdict.value - ball.radius;

  if (n_samples == 0) return verdict;
  Ball open = ball;
  open.closed = false;
  const BallSample members = ball_sample(space, open, n_samples, seed);
  const Ball neighborhood{y, y, verdict.separation_radius, false};
  for (const Vector& x : members.points) {
    ++verdict.samples_checked;
    if (ball_contains(space, neighborhood, x)) verdict.certified = false;
  }
  return verdict;
}

}  // namespace gnorm
