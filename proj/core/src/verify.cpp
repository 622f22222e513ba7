#include "gnorm/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "gnorm/error.hpp"
#include "gnorm/random.hpp"

namespace gnorm {

std::string to_string(AxiomId id) {
  switch (id) {
    case AxiomId::N1: return "N1";
    case AxiomId::N2: return "N2";
    case AxiomId::N3: return "N3";
    case AxiomId::N4: return "N4";
    case AxiomId::N5: return "N5";
    case AxiomId::G1: return "G1";
    case AxiomId::G2: return "G2";
    case AxiomId::G3: return "G3";
    case AxiomId::G4: return "G4";
    case AxiomId::G5: return "G5";
    case AxiomId::REV_INEQ: return "REV_INEQ";
    case AxiomId::CONT_ADD: return "CONT_ADD";
    case AxiomId::CONT_SCALAR: return "CONT_SCALAR";
    case AxiomId::CONT_NORM: return "CONT_NORM";
    case AxiomId::METRIC_DG: return "METRIC_DG";
  }
  return "?";
}

AxiomId axiom_from_string(const std::string& name) {
  static constexpr std::array kAll = {
      AxiomId::N1,       AxiomId::N2,       AxiomId::N3,          AxiomId::N4,
      AxiomId::N5,       AxiomId::G1,       AxiomId::G2,          AxiomId::G3,
      AxiomId::G4,       AxiomId::G5,       AxiomId::REV_INEQ,    AxiomId::CONT_ADD,
      AxiomId::CONT_SCALAR, AxiomId::CONT_NORM, AxiomId::METRIC_DG,
  };
  for (AxiomId id : kAll) {
    if (to_string(id) == name) return id;
  }
  throw InputError("unknown axiom id '" + name + "'");
}

double Outcome::normalized() const { return excess / std::max(1.0, std::abs(scale)); }

namespace {

using Generator = std::function<TestCase(SplitMix64&, std::size_t)>;
using Evaluator = std::function<Outcome(const TestCase&)>;

struct Property {
  AxiomId id;
  Generator generate;
  Evaluator evaluate;
};

bool violates(const Outcome& o) { return o.normalized() > kBaseTolerance; }

double strength(const Outcome& o) {
  return o.scale > 0.0 ? o.excess / o.scale : o.excess;
}

double max_abs_of(std::initializer_list<const Vector*> vs) {
  double m = 0.0;
  for (const Vector* v : vs) m = std::max(m, v->max_abs());
  return m;
}

// ---- sampling -------------------------------------------------------------

// Gaussian draws mixed with the degenerate shapes the axioms branch on:
// all-zero, repeated arguments, negated pairs, collinear sets, extreme scales.
std::vector<Vector> sample_vectors(SplitMix64& rng, std::size_t trial, std::size_t dim,
                                   std::size_t count, double scale) {
  std::vector<Vector> vs;
  vs.reserve(count);
  switch (trial % 10) {
    case 0:
      vs.assign(count, Vector::zero(dim));
      break;
    case 1:
      vs.assign(count, gaussian_vector(rng, dim, scale));
      break;
    case 2:
      for (std::size_t i = 0; i < count; ++i) {
        vs.push_back(i % 2 == 1 ? -vs.back() : gaussian_vector(rng, dim, scale));
      }
      break;
    case 3: {
      const Vector base = gaussian_vector(rng, dim, scale);
      std::normal_distribution<double> coef(0.0, 1.0);
      for (std::size_t i = 0; i < count; ++i) vs.push_back(coef(rng) * base);
      break;
    }
    case 4:
      for (std::size_t i = 0; i < count; ++i) vs.push_back(gaussian_vector(rng, dim, 1e-6 * scale));
      break;
    case 5:
      for (std::size_t i = 0; i < count; ++i) vs.push_back(gaussian_vector(rng, dim, 1e6 * scale));
      break;
    case 6:
      vs.push_back(gaussian_vector(rng, dim, scale));
      for (std::size_t i = 1; i < count; ++i) vs.push_back(Vector::zero(dim));
      break;
    case 7: {
      for (std::size_t i = 0; i < count; ++i) vs.push_back(gaussian_vector(rng, dim, scale));
      std::uniform_int_distribution<std::size_t> pick(0, count - 1);
      vs[pick(rng)] = Vector::zero(dim);
      break;
    }
    default:
      for (std::size_t i = 0; i < count; ++i) vs.push_back(gaussian_vector(rng, dim, scale));
      break;
  }
  return vs;
}

Generator vectors_generator(std::size_t dim, std::size_t count, double scale) {
  return [=](SplitMix64& rng, std::size_t trial) {
    return TestCase{sample_vectors(rng, trial, dim, count, scale), {}};
  };
}

double sample_alpha(SplitMix64& rng, std::size_t trial) {
  std::normal_distribution<double> normal(0.0, 1.0);
  switch (trial % 8) {
    case 0: return 0.0;
    case 1: return 1.0;
    case 2: return -1.0;
    case 3: return 1e-6;
    case 4: return -1e6;
    case 5: return 1e3 * normal(rng);
    default: return normal(rng);
  }
}

// x and y = x + s·d with max|d| = 1 and s swept over {1e-6, 1, 1e6}.
Generator separated_pair_generator(std::size_t dim, double scale) {
  return [=](SplitMix64& rng, std::size_t trial) {
    static constexpr std::array kScales = {1e-6, 1.0, 1e6};
    Vector x = gaussian_vector(rng, dim, scale);
    Vector d = gaussian_vector(rng, dim);
    const double m = d.max_abs();
    if (m == 0.0) {
      d[0] = 1.0;
    } else {
      d *= 1.0 / m;
    }
    Vector y = x + (kScales[trial % kScales.size()] * scale) * d;
    return TestCase{{std::move(x), std::move(y)}, {}};
  };
}

// ---- G-norm axioms --------------------------------------------------------

Outcome eval_n1(const GNormSpace& sp, const TestCase& tc) {
  const auto& v = tc.vectors;
  const double value = sp.eval(v[0], v[1], v[2]);
  const double m = max_abs_of({&v[0], &v[1], &v[2]});
  const double scale = std::max(value, m);
  const double tau = tolerance_for(scale);
  double excess = std::max(0.0, -value);
  if (m == 0.0) {
    excess = std::max(excess, value);
  } else if (m > 10.0 * tau && value <= tau) {
    excess = std::max(excess, m - value);
  }
  return {excess, scale};
}

Outcome eval_n2(const GNormSpace& sp, const TestCase& tc) {
  const auto& v = tc.vectors;
  const double base = sp.eval(v[0], v[1], v[2]);
  std::array<std::size_t, 3> idx = {0, 1, 2};
  double excess = 0.0;
  while (std::next_permutation(idx.begin(), idx.end())) {
    excess = std::max(excess, std::abs(sp.eval(v[idx[0]], v[idx[1]], v[idx[2]]) - base));
  }
  return {excess, base};
}

Outcome eval_n3(const GNormSpace& sp, const TestCase& tc) {
  const auto& v = tc.vectors;
  const double alpha = tc.scalars.at(0);
  const double lhs = sp.eval(alpha * v[0], alpha * v[1], alpha * v[2]);
  const double rhs = std::abs(alpha) * sp.eval(v[0], v[1], v[2]);
  return {std::abs(lhs - rhs), std::max(lhs, rhs)};
}

Outcome eval_n4(const GNormSpace& sp, const TestCase& tc) {
  const auto& v = tc.vectors;
  const double lhs = sp.eval(v[0] + v[3], v[1] + v[4], v[2] + v[5]);
  const double a = sp.eval(v[0], v[1], v[2]);
  const double b = sp.eval(v[3], v[4], v[5]);
  return {lhs - (a + b), std::max(lhs, a + b)};
}

Outcome eval_n5(const GNormSpace& sp, const TestCase& tc) {
  const auto& v = tc.vectors;
  const double lhs = sp.eval(v[0], v[1], v[2]);
  const double merged = sp.eval(v[0] + v[1], sp.zero(), v[2]);
  return {merged - lhs, std::max(lhs, merged)};
}

Outcome eval_rev(const GNormSpace& sp, const TestCase& tc) {
  const auto& v = tc.vectors;
  const double a = sp.eval(v[0], v[1], v[2]);
  const double b = sp.eval(v[3], v[4], v[5]);
  const double c = sp.eval(v[0] - v[3], v[1] - v[4], v[2] - v[5]);
  return {std::abs(a - b) - c, std::max({a, b, c})};
}

Outcome eval_dg(const GNormSpace& sp, const TestCase& tc) {
  const auto& v = tc.vectors;
  const double xy = dg_metric(sp, v[0], v[1]);
  const double yx = dg_metric(sp, v[1], v[0]);
  const double yz = dg_metric(sp, v[1], v[2]);
  const double xz = dg_metric(sp, v[0], v[2]);
  const double xx = dg_metric(sp, v[0], v[0]);
  const double excess = std::max({xx, std::abs(xy - yx), xz - (xy + yz), -xy});
  return {excess, std::max(xz, xy + yz)};
}

// ---- continuity -----------------------------------------------------------

ContinuityTrace trace_of(const GNormSpace& sp, const TestCase& tc) {
  const auto& v = tc.vectors;
  const double a = tc.scalars.at(0);
  const double da = tc.scalars.at(1);
  const Vector sum_limit = v[0] + v[1];
  const Vector scaled_limit = a * v[0];
  const double norm_limit = sp.eval(v[0], v[1], v[2]);

  ContinuityTrace out;
  double step = 1.0;
  for (std::size_t n = 0; n < kContinuitySteps; ++n, step *= 0.5) {
    const Vector xn = v[0] + step * v[3];
    const Vector yn = v[1] + step * v[4];
    const Vector zn = v[2] + step * v[5];
    const double an = a + step * da;
    const Vector ds = (xn + yn) - sum_limit;
    const Vector dm = an * xn - scaled_limit;
    out.addition.push_back(sp.eval(ds, ds, ds));
    out.scalar.push_back(sp.eval(dm, dm, dm));
    out.norm.push_back(std::abs(sp.eval(xn, yn, zn) - norm_limit));
    out.norm_envelope.push_back(sp.eval(xn - v[0], yn - v[1], zn - v[2]));
  }
  return out;
}

// Residuals must not grow (up to τ) from `burn_in` on and must be within τ
// by the deadline.
Outcome decay_outcome(const std::vector<double>& r, double magnitude, std::size_t burn_in) {
  const double scale = std::max(magnitude, r.front());
  double excess = r.at(kContinuityDeadline);
  for (std::size_t n = burn_in; n + 1 < r.size(); ++n) excess = std::max(excess, r[n + 1] - r[n]);
  return {excess, scale};
}

Outcome eval_cont(const GNormSpace& sp, AxiomId id, const TestCase& tc) {
  const ContinuityTrace t = trace_of(sp, tc);
  const auto& v = tc.vectors;
  switch (id) {
    case AxiomId::CONT_ADD: return decay_outcome(t.addition, induced_norm(sp, v[0] + v[1]), 0);
    case AxiomId::CONT_SCALAR:
      return decay_outcome(t.scalar, induced_norm(sp, tc.scalars[0] * v[0]), kContinuityBurnIn);
    default: {
      Outcome o = decay_outcome(t.norm, sp.eval(v[0], v[1], v[2]), kContinuityBurnIn);
      for (std::size_t n = 0; n < t.norm.size(); ++n) {
        o.excess = std::max(o.excess, t.norm[n] - t.norm_envelope[n]);
        o.scale = std::max(o.scale, t.norm_envelope[n]);
      }
      return o;
    }
  }
}

Generator continuity_generator(std::size_t dim, double scale) {
  return [=](SplitMix64& rng, std::size_t trial) {
    std::normal_distribution<double> normal(0.0, 1.0);
    TestCase tc;
    for (int i = 0; i < 3; ++i) tc.vectors.push_back(gaussian_vector(rng, dim, scale));
    const bool constant = trial % 10 == 0;
    for (int i = 0; i < 3; ++i) {
      tc.vectors.push_back(constant ? Vector::zero(dim) : gaussian_vector(rng, dim, scale));
    }
    tc.scalars = {normal(rng), constant ? 0.0 : normal(rng)};
    return tc;
  };
}

// ---- G-metric axioms ------------------------------------------------------

Outcome eval_g(const GMetric& g, AxiomId id, const TestCase& tc) {
  const auto& v = tc.vectors;
  switch (id) {
    case AxiomId::G1: {
      const double same = g(v[0], v[0], v[0]);
      const double any = g(v[0], v[1], v[2]);
      return {std::max({std::abs(same), -any, 0.0}), std::abs(any)};
    }
    case AxiomId::G2: {
      if (v[0] == v[1]) return {0.0, 0.0};
      const double value = g(v[0], v[0], v[1]);
      const double m = (v[0] - v[1]).max_abs();
      const double scale = std::max(value, m);
      const double tau = tolerance_for(scale);
      if (m > 10.0 * tau && value <= tau) return {m - value, scale};
      return {0.0, scale};
    }
    case AxiomId::G3: {
      const double lhs = g(v[0], v[0], v[1]);
      const double rhs = g(v[0], v[1], v[2]);
      return {lhs - rhs, std::max(lhs, rhs)};
    }
    case AxiomId::G4: {
      const double base = g(v[0], v[1], v[2]);
      std::array<std::size_t, 3> idx = {0, 1, 2};
      double excess = 0.0;
      while (std::next_permutation(idx.begin(), idx.end())) {
        excess = std::max(excess, std::abs(g(v[idx[0]], v[idx[1]], v[idx[2]]) - base));
      }
      return {excess, base};
    }
    case AxiomId::G5: {
      const double lhs = g(v[0], v[1], v[2]);
      const double rhs = g(v[0], v[3], v[3]) + g(v[3], v[1], v[2]);
      return {lhs - rhs, std::max(lhs, rhs)};
    }
    default: break;
  }
  throw InputError("axiom " + to_string(id) + " is not a G-metric axiom");
}

bool is_gmetric_axiom(AxiomId id) {
  return id == AxiomId::G1 || id == AxiomId::G2 || id == AxiomId::G3 || id == AxiomId::G4 ||
         id == AxiomId::G5;
}

Property gmetric_property(const GMetric& g, AxiomId id, double scale) {
  Generator gen;
  switch (id) {
    case AxiomId::G2: gen = separated_pair_generator(g.dim, scale); break;
    case AxiomId::G5: gen = vectors_generator(g.dim, 4, scale); break;
    default: gen = vectors_generator(g.dim, 3, scale); break;
  }
  return {id, std::move(gen), [g, id](const TestCase& tc) { return eval_g(g, id, tc); }};
}

Property space_property(const GNormSpace& sp, AxiomId id, double scale) {
  if (is_gmetric_axiom(id)) return gmetric_property(derived_gmetric_of(sp), id, scale);
  const std::size_t dim = sp.dim();
  Generator gen;
  switch (id) {
    case AxiomId::N3: {
      auto base = vectors_generator(dim, 3, scale);
      gen = [base](SplitMix64& rng, std::size_t trial) {
        TestCase tc = base(rng, trial);
        tc.scalars = {sample_alpha(rng, trial)};
        return tc;
      };
      break;
    }
    case AxiomId::N4:
    case AxiomId::REV_INEQ: gen = vectors_generator(dim, 6, scale); break;
    case AxiomId::CONT_ADD:
    case AxiomId::CONT_SCALAR:
    case AxiomId::CONT_NORM: gen = continuity_generator(dim, scale); break;
    default: gen = vectors_generator(dim, 3, scale); break;
  }
  return {id, std::move(gen), [sp, id](const TestCase& tc) { return evaluate_case(sp, id, tc); }};
}

// ---- running and shrinking ------------------------------------------------

std::optional<Outcome> try_evaluate(const Evaluator& eval, const TestCase& tc) {
  try {
    return eval(tc);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

Counterexample shrink(const Property& prop, std::size_t trial, TestCase tc, Outcome outcome) {
  Counterexample cx;
  cx.axiom = prop.id;
  cx.trial = trial;
  cx.original = tc;

  auto accept = [&](const TestCase& candidate) {
    const auto o = try_evaluate(prop.evaluate, candidate);
    if (!o || !violates(*o) || strength(*o) < strength(outcome)) return false;
    tc = candidate;
    outcome = *o;
    cx.shrink_path.push_back(candidate);
    return true;
  };
  auto shrink_entry = [&](auto get) {
    const double value = get(tc);
    if (value == 0.0) return false;
    for (double replacement : {0.0, 0.5 * value}) {
      TestCase candidate = tc;
      get(candidate) = replacement;
      if (accept(candidate)) return true;
    }
    return false;
  };

  for (std::size_t round = 0; round < kMaxShrinkRounds; ++round) {
    bool changed = false;
    for (std::size_t s = 0; s < tc.vectors.size(); ++s) {
      for (std::size_t i = 0; i < tc.vectors[s].size(); ++i) {
        changed |= shrink_entry([s, i](TestCase& c) -> double& { return c.vectors[s][i]; });
      }
    }
    for (std::size_t j = 0; j < tc.scalars.size(); ++j) {
      changed |= shrink_entry([j](TestCase& c) -> double& { return c.scalars[j]; });
    }
    if (!changed) break;
  }
  cx.shrunk = std::move(tc);
  cx.outcome = outcome;
  return cx;
}

struct RunResult {
  AxiomReport report;
  std::optional<Counterexample> counterexample;
};

RunResult run_property(const Property& prop, std::size_t n_samples, std::uint64_t seed,
                       bool stop_at_first) {
  RunResult out;
  out.report.axiom = prop.id;
  out.report.seed = seed;
  std::optional<std::pair<std::size_t, std::pair<TestCase, Outcome>>> first;
  for (std::size_t i = 0; i < n_samples; ++i) {
    auto rng = trial_rng(seed, i);
    TestCase tc = prop.generate(rng, i);
    const Outcome o = prop.evaluate(tc);
    ++out.report.samples;
    out.report.worst_violation = std::max(out.report.worst_violation, std::max(0.0, o.normalized()));
    if (violates(o) && !first) {
      first.emplace(i, std::make_pair(std::move(tc), o));
      if (stop_at_first) break;
    }
  }
  out.report.passed = !first.has_value();
  if (first) {
    out.counterexample = shrink(prop, first->first, first->second.first, first->second.second);
    out.report.counterexample = out.counterexample->shrunk;
  }
  return out;
}

std::vector<AxiomReport> run_all(const auto& make_property, std::initializer_list<AxiomId> ids,
                                 std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("n_samples must be at least 1");
  std::vector<AxiomReport> reports;
  for (AxiomId id : ids) reports.push_back(run_property(make_property(id), n, seed, false).report);
  return reports;
}

}  // namespace

// ---- public API -----------------------------------------------------------

Outcome evaluate_case(const GNormSpace& space, AxiomId axiom, const TestCase& tc) {
  switch (axiom) {
    case AxiomId::N1: return eval_n1(space, tc);
    case AxiomId::N2: return eval_n2(space, tc);
    case AxiomId::N3: return eval_n3(space, tc);
    case AxiomId::N4: return eval_n4(space, tc);
    case AxiomId::N5: return eval_n5(space, tc);
    case AxiomId::REV_INEQ: return eval_rev(space, tc);
    case AxiomId::METRIC_DG: return eval_dg(space, tc);
    case AxiomId::CONT_ADD:
    case AxiomId::CONT_SCALAR:
    case AxiomId::CONT_NORM: return eval_cont(space, axiom, tc);
    default: return eval_g(derived_gmetric_of(space), axiom, tc);
  }
}

Outcome evaluate_case(const GMetric& metric, AxiomId axiom, const TestCase& tc) {
  return eval_g(metric, axiom, tc);
}

std::vector<AxiomReport> check_gnorm_axioms(const GNormSpace& space, std::size_t n_samples,
                                            std::uint64_t seed, SamplingOptions opts) {
  return run_all([&](AxiomId id) { return space_property(space, id, opts.scale); },
                 {AxiomId::N1, AxiomId::N2, AxiomId::N3, AxiomId::N4, AxiomId::N5}, n_samples,
                 seed);
}

std::vector<AxiomReport> check_gmetric_axioms(const GMetric& metric, std::size_t n_samples,
                                              std::uint64_t seed, SamplingOptions opts) {
  return run_all([&](AxiomId id) { return gmetric_property(metric, id, opts.scale); },
                 {AxiomId::G1, AxiomId::G2, AxiomId::G3, AxiomId::G4, AxiomId::G5}, n_samples,
                 seed);
}

std::vector<AxiomReport> check_derived_gmetric(const GNormSpace& space, std::size_t n_samples,
                                               std::uint64_t seed, SamplingOptions opts) {
  return check_gmetric_axioms(derived_gmetric_of(space), n_samples, seed, opts);
}

AxiomReport check_reverse_inequality(const GNormSpace& space, std::size_t n_samples,
                                     std::uint64_t seed, SamplingOptions opts) {
  return run_all([&](AxiomId id) { return space_property(space, id, opts.scale); },
                 {AxiomId::REV_INEQ}, n_samples, seed)
      .front();
}

AxiomReport check_dg_metric(const GNormSpace& space, std::size_t n_samples, std::uint64_t seed,
                            SamplingOptions opts) {
  return run_all([&](AxiomId id) { return space_property(space, id, opts.scale); },
                 {AxiomId::METRIC_DG}, n_samples, seed)
      .front();
}

std::vector<AxiomReport> check_continuity(const GNormSpace& space, std::size_t n_sequences,
                                          std::uint64_t seed, SamplingOptions opts) {
  return run_all([&](AxiomId id) { return space_property(space, id, opts.scale); },
                 {AxiomId::CONT_ADD, AxiomId::CONT_SCALAR, AxiomId::CONT_NORM}, n_sequences,
                 seed);
}

ContinuityTrace continuity_trace(const GNormSpace& space, const TestCase& probe) {
  if (probe.vectors.size() != 6 || probe.scalars.size() != 2) {
    throw InputError("continuity probe needs six vectors and two scalars");
  }
  return trace_of(space, probe);
}

double boundedness_estimate(const GNormSpace& space_x, const GNormSpace& space_y,
                            const Mapping& f, std::size_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) throw InputError("boundedness_estimate: n_samples must be at least 1");
  double best = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    auto rng = trial_rng(seed, i);
    const Vector x = gaussian_vector(rng, space_x.dim());
    const Vector y = gaussian_vector(rng, space_x.dim());
    const Vector z = gaussian_vector(rng, space_x.dim());
    const double den = space_x.eval(x, y, z);
    if (den < kBaseTolerance) continue;
    ++used;
    best = std::max(best, space_y.eval(f(x), f(y), f(z)) / den);
  }
  if (used == 0) throw SamplingError("boundedness_estimate: every sample was degenerate");
  return best;
}

double commutativity_residual(const GNormSpace& space, const Mapping& t, const Mapping& s,
                              std::size_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) throw InputError("commutativity_residual: n_samples must be at least 1");
  double worst = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    auto rng = trial_rng(seed, i);
    const Vector x = i == 0 ? space.zero() : gaussian_vector(rng, space.dim());
    const Vector st = s(t(x));
    worst = std::max(worst, derived_gmetric(space, t(s(x)), st, st));
  }
  return worst;
}

std::optional<Counterexample> counterexample_search(const GNormSpace& space, AxiomId axiom,
                                                    std::size_t n_samples, std::uint64_t seed,
                                                    SamplingOptions opts) {
  return run_property(space_property(space, axiom, opts.scale), n_samples, seed, true)
      .counterexample;
}

std::optional<Counterexample> counterexample_search(const GMetric& metric, AxiomId axiom,
                                                    std::size_t n_samples, std::uint64_t seed,
                                                    SamplingOptions opts) {
  if (!is_gmetric_axiom(axiom)) {
    throw InputError("axiom " + to_string(axiom) + " does not apply to a bare G-metric");
  }
  return run_property(gmetric_property(metric, axiom, opts.scale), n_samples, seed, true)
      .counterexample;
}

}  // namespace gnorm
