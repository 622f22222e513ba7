#include "gnorm/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnorm/error.hpp"
#include "gnorm/random.hpp"
#include "gnorm/verify.hpp"

namespace gnorm {

Mapping Mapping::affine(Matrix a, Vector b) {
  if (!a.square()) throw InputError("affine mapping needs a square matrix");
  if (b.size() != a.rows()) throw InputError("affine offset does not match the matrix size");
  Mapping m(Kind::affine, nullptr);
  m.apply_ = [a, b](const Vector& x) { return a.apply(x) + b; };
  m.matrix_ = std::move(a);
  m.offset_ = std::move(b);
  return m;
}

Mapping Mapping::blackbox(VectorMap apply) {
  if (!apply) throw InputError("blackbox mapping needs a function");
  return Mapping(Kind::blackbox, std::move(apply));
}

double fixed_point_residual(const GNormSpace& space, const Mapping& t, const Vector& u) {
  return derived_gmetric(space, t(u), u, u);
}

double contraction_estimate(const GNormSpace& space, const Mapping& t, std::size_t n_samples,
                            std::uint64_t seed) {
  if (n_samples == 0) throw InputError("contraction_estimate: n_samples must be at least 1");
  double best = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    auto rng = trial_rng(seed, i);
    const Vector x = gaussian_vector(rng, space.dim());
    const Vector y = gaussian_vector(rng, space.dim());
    const Vector z = gaussian_vector(rng, space.dim());
    const double den = derived_gmetric(space, x, y, z);
    if (den < kBaseTolerance) continue;
    ++used;
    best = std::max(best, derived_gmetric(space, t(x), t(y), t(z)) / den);
  }
  if (used == 0) throw SamplingError("contraction_estimate: every sampled triple was degenerate");
  return best;
}

namespace {

void check_config(const GNormSpace& space, const SolveConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw InputError("solver tol must be positive");
  if (cfg.max_iter == 0) throw InputError("solver max_iter must be at least 1");
  space.check(cfg.x0, "x0");
}

double estimate_k(const GNormSpace& space, const Mapping& m, SolveReport& report) {
  const double k = kEstimateInflation * contraction_estimate(space, m, kEstimateSamples, 0);
  report.k_estimated = true;
  report.notes.push_back("contraction constant estimated from " +
                         std::to_string(kEstimateSamples) +
                         " samples (+5%); guarantee is heuristic");
  if (!(k < 1.0)) {
    throw InvalidConstantError("estimated contraction constant " + std::to_string(k) +
                               " is not below 1");
  }
  return k;
}

// Picard iteration of `step` from `start` with contraction constant k.
void iterate(const GNormSpace& space, const VectorMap& step, const Vector& start, double k,
             const SolveConfig& cfg, SolveReport& report) {
  report.k_used = k;
  IterationTrace& trace = report.trace;
  Vector x = start;
  double initial_gap = 0.0;
  const Vector zero = space.zero();

  for (std::size_t n = 0; n < cfg.max_iter; ++n) {
    Vector next = step(x);
    if (next.size() != x.size() || !next.all_finite()) {
      report.notes.push_back("iterate " + std::to_string(n + 1) + " is not a finite vector");
      break;
    }
    const double residual = derived_gmetric(space, x, next, next);
    if (n == 0) {
      const Vector d = x - next;
      initial_gap = space.eval(d, -d, zero);
    }
    const double bound = std::pow(k, static_cast<double>(n)) / (1.0 - k) * initial_gap;
    trace.iterates.push_back(x);
    trace.step_residuals.push_back(residual);
    trace.apriori_bounds.push_back(bound);
    x = std::move(next);
    if (residual <= cfg.tol || bound <= cfg.tol) break;
  }

  report.fixed_point = x;
  report.iterations = trace.size();
  report.final_residual = trace.size() == 0 ? 0.0 : trace.step_residuals.back();
  report.converged = trace.size() > 0 && report.final_residual <= cfg.tol;

  report.bound_respected = true;
  for (std::size_t n = 0; n < trace.size(); ++n) {
    const double tail = derived_gmetric(space, trace.iterates[n], x, x);
    const double bound = trace.apriori_bounds[n];
    if (tail > bound + tolerance({tail, bound})) {
      report.bound_respected = false;
      break;
    }
  }
}

}  // namespace

SolveReport picard_solve(const GNormSpace& space, const Mapping& t, const SolveConfig& cfg) {
  check_config(space, cfg);
  SolveReport report;
  report.method = "picard";
  double k = 0.0;
  if (t.known_k) {
    k = *t.known_k;
    if (!(k >= 0.0 && k < 1.0)) {
      throw InvalidConstantError("contraction constant k = " + std::to_string(k) +
                                 " is outside [0, 1)");
    }
  } else {
    k = estimate_k(space, t, report);
  }
  iterate(space, [&t](const Vector& x) { return t(x); }, cfg.x0, k, cfg, report);
  report.residual_t = fixed_point_residual(space, t, report.fixed_point);
  return report;
}

SolveReport expansive_solve(const GNormSpace& space, const Mapping& t, const SolveConfig& cfg) {
  check_config(space, cfg);
  SolveReport report;
  report.method = "expansive";

  VectorMap inverse;
  std::optional<Mapping> inverse_map;
  if (t.inverse) {
    inverse = t.inverse;
    inverse_map = Mapping::blackbox(inverse);
    if (!t.is_affine()) report.notes.push_back("linearity of T is not checked for black boxes");
  } else if (t.is_affine()) {
    const Matrix a_inv = LuDecomposition(t.matrix()).inverse();
    Vector offset = -a_inv.apply(t.offset());
    inverse_map = Mapping::affine(a_inv, std::move(offset));
    inverse = [m = *inverse_map](const Vector& x) { return m(x); };
  } else {
    throw UnsupportedError("expansive_solve needs an inverse for a black-box mapping");
  }
  if (t.is_affine() && !t.offset().is_zero()) {
    report.affine_extension = true;
    report.notes.push_back("affine T with nonzero offset: extension of the linear theorem");
  }

  double k = 0.0;
  if (t.known_q) {
    const double q = *t.known_q;
    if (!(q > 1.0)) {
      throw InvalidConstantError("expansion constant q = " + std::to_string(q) +
                                 " must exceed 1");
    }
    k = 1.0 / q;
  } else {
    k = estimate_k(space, *inverse_map, report);
  }
  iterate(space, inverse, cfg.x0, k, cfg, report);
  report.residual_t = fixed_point_residual(space, t, report.fixed_point);
  return report;
}

SolveReport jungck_solve(const GNormSpace& space, const Mapping& t, const Mapping& s, double q,
                         const SolveConfig& cfg) {
  check_config(space, cfg);
  if (!(q > 0.0 && q < 1.0)) {
    throw InvalidConstantError("Jungck constant q = " + std::to_string(q) +
                               " is outside (0, 1)");
  }
  SolveReport report;
  report.method = "jungck";

  VectorMap preimage;
  if (s.inverse) {
    preimage = s.inverse;
  } else if (s.is_affine()) {
    const LuDecomposition lu(s.matrix());
    preimage = [lu, b = s.offset()](const Vector& y) { return lu.solve(y - b); };
  } else {
    throw UnsupportedError("jungck_solve needs a preimage oracle for a black-box S");
  }

  std::size_t step_index = 0;
  auto step = [&](const Vector& y) {
    ++step_index;
    Vector x;
    try {
      x = preimage(y);
    } catch (const std::exception& e) {
      throw RangeInclusionError("no S-preimage at step " + std::to_string(step_index) + ": " +
                                e.what());
    }
    if (x.size() != space.dim() || !x.all_finite()) {
      throw RangeInclusionError("S-preimage at step " + std::to_string(step_index) +
                                " is not a finite vector of the space");
    }
    const double mismatch = derived_gmetric(space, s(x), y, y);
    if (mismatch > tolerance({induced_norm(space, y)})) {
      throw RangeInclusionError("S-preimage at step " + std::to_string(step_index) +
                                " misses its target by " + std::to_string(mismatch));
    }
    return t(x);
  };

  iterate(space, step, t(cfg.x0), q, cfg, report);
  const Vector& u = report.fixed_point;
  report.residual_t = fixed_point_residual(space, t, u);
  report.residual_s = fixed_point_residual(space, s, u);
  report.commutativity_residual = commutativity_residual(space, t, s, 1000, 0);
  report.notes.push_back("trace follows y_n = T(x_n)");
  report.notes.push_back("continuity of S is assumed, not checked");
  report.notes.push_back("T(X) contained in S(X) is checked only along the orbit");
  return report;
}

}  // namespace gnorm
