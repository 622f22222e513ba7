#include "gnorm/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnorm/error.hpp"

namespace gnorm {

// ---- Vector ---------------------------------------------------------------

bool Vector::all_finite() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return std::isfinite(c); });
}

bool Vector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

double Vector::max_abs() const noexcept {
  double m = 0.0;
  for (double c : coords_) m = std::max(m, std::abs(c));
  return m;
}

namespace {

void require_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw InputError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
}

}  // namespace

Vector& Vector::operator+=(const Vector& rhs) {
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Vector& Vector::operator*=(double alpha) noexcept {
  for (double& c : coords_) c *= alpha;
  return *this;
}

Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
Vector operator-(Vector v) { return v *= -1.0; }
Vector operator*(double alpha, Vector v) { return v *= alpha; }
Vector operator*(Vector v, double alpha) { return v *= alpha; }

// ---- tolerance ------------------------------------------------------------

double tolerance_for(double magnitude) {
  return kBaseTolerance * std::max(1.0, std::abs(magnitude));
}

double tolerance(std::initializer_list<double> magnitudes) {
  double m = 0.0;
  for (double v : magnitudes) m = std::max(m, std::abs(v));
  return tolerance_for(m);
}

// ---- space kinds ----------------------------------------------------------

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::sum_pnorm: return "sum_pnorm";
    case SpaceKind::grid_maxsum: return "grid_maxsum";
    case SpaceKind::max_candidate: return "max_candidate";
    case SpaceKind::custom: return "custom";
  }
  return "custom";
}

SpaceKind space_kind_from_string(const std::string& name) {
  if (name == "sum_pnorm") return SpaceKind::sum_pnorm;
  if (name == "grid_maxsum") return SpaceKind::grid_maxsum;
  if (name == "max_candidate") return SpaceKind::max_candidate;
  if (name == "custom") return SpaceKind::custom;
  throw InputError("unknown space kind '" + name + "'");
}

// ---- GNormSpace -----------------------------------------------------------

GNormSpace::GNormSpace(SpaceKind kind, std::size_t dim, TripleEvaluator evaluator, double p,
                       std::size_t grid_size)
    : kind_(kind), dim_(dim), p_(p), grid_size_(grid_size), evaluator_(std::move(evaluator)) {
  if (dim_ == 0) throw InputError("space dimension must be positive");
  if (!evaluator_) throw InputError("space evaluator is empty");
}

void GNormSpace::check(const Vector& v, const char* what) const {
  if (v.size() != dim_) {
    throw InputError(std::string(what) + " has dimension " + std::to_string(v.size()) +
                     ", space has dimension " + std::to_string(dim_));
  }
  if (!v.all_finite()) throw InputError(std::string(what) + " has a non-finite coordinate");
}

double GNormSpace::eval(const Vector& x, const Vector& y, const Vector& z) const {
  check(x, "x");
  check(y, "y");
  check(z, "z");
  return evaluator_(x, y, z);
}

double GMetric::operator()(const Vector& x, const Vector& y, const Vector& z) const {
  for (const Vector* v : {&x, &y, &z}) {
    if (v->size() != dim) {
      throw InputError("G-metric '" + name + "' expects dimension " + std::to_string(dim) +
                       ", got " + std::to_string(v->size()));
    }
    if (!v->all_finite()) throw InputError("G-metric argument has a non-finite coordinate");
  }
  return fn(x, y, z);
}

// ---- operations -----------------------------------------------------------

double gnorm_eval(const GNormSpace& space, const Vector& x, const Vector& y, const Vector& z) {
  return space.eval(x, y, z);
}

double induced_norm(const GNormSpace& space, const Vector& x) {
  const Vector zero = space.zero();
  return space.eval(x, zero, zero);
}

double derived_gmetric(const GNormSpace& space, const Vector& x, const Vector& y,
                       const Vector& z) {
  space.check(x, "x");
  space.check(y, "y");
  space.check(z, "z");
  return space.eval(x - y, y - z, z - x);
}

GMetric derived_gmetric_of(const GNormSpace& space) {
  return GMetric{"derived:" + to_string(space.kind()), space.dim(),
                 [space](const Vector& x, const Vector& y, const Vector& z) {
                   return derived_gmetric(space, x, y, z);
                 }};
}

double dg_metric(const GNormSpace& space, const Vector& x, const Vector& y) {
  return derived_gmetric(space, x, y, y) + derived_gmetric(space, x, x, y);
}

double reverse_gap(const GNormSpace& space, const Vector& x, const Vector& y, const Vector& z,
                   const Vector& u, const Vector& v, const Vector& w) {
  const double lhs = std::abs(space.eval(x, y, z) - space.eval(u, v, w));
  return space.eval(x - u, y - v, z - w) - lhs;
}

namespace {

void check_window(const GNormSpace& space, const SequenceWindow& window) {
  if (window.points.empty()) throw InputError("sequence window is empty");
  for (const Vector& p : window.points) space.check(p, "window point");
}

}  // namespace

double convergence_residual(const GNormSpace& space, const SequenceWindow& window,
                            const Vector& candidate_limit) {
  check_window(space, window);
  space.check(candidate_limit, "candidate limit");
  double worst = 0.0;
  for (const Vector& p : window.points) {
    const Vector d = p - candidate_limit;
    worst = std::max(worst, space.eval(d, d, d));
  }
  return worst;
}

double cauchy_residual(const GNormSpace& space, const SequenceWindow& window, CauchyMode mode) {
  check_window(space, window);
  const auto& pts = window.points;
  const std::size_t w = pts.size();
  if (w < 2) throw InputError("cauchy residual needs at least two points");
  if (mode == CauchyMode::automatic) {
    mode = w <= kCauchyExactLimit ? CauchyMode::exact : CauchyMode::pairwise_bound;
  }

  if (mode == CauchyMode::exact) {
    double worst = 0.0;
    for (std::size_t l = 0; l < w; ++l)
      for (std::size_t m = 0; m < w; ++m)
        for (std::size_t n = 0; n < w; ++n)
          worst = std::max(worst, space.eval(pts[l] - pts[m], pts[m] - pts[n], pts[n] - pts[l]));
    return worst;
  }

  // ‖a−b, b−c, c−a‖ ≤ ‖a−b, b−a, 0‖ + ‖0, a−c, c−a‖ by subadditivity.
  const Vector zero = space.zero();
  double first = 0.0;
  double second = 0.0;
  for (std::size_t l = 0; l < w; ++l) {
    for (std::size_t m = 0; m < w; ++m) {
      const Vector d = pts[l] - pts[m];
      first = std::max(first, space.eval(d, -d, zero));
      second = std::max(second, space.eval(zero, d, -d));
    }
  }
  return first + second;
}

}  // namespace gnorm
