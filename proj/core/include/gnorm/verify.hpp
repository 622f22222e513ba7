#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnorm/core.hpp"
#include "gnorm/solvers.hpp"

namespace gnorm {

enum class AxiomId {
  N1, N2, N3, N4, N5,
  G1, G2, G3, G4, G5,
  REV_INEQ,
  CONT_ADD, CONT_SCALAR, CONT_NORM,
  METRIC_DG,
};

std::string to_string(AxiomId id);
/// Throws InputError for unknown names.
AxiomId axiom_from_string(const std::string& name);

/// Inputs of one trial: the vectors an axiom quantifies over, in the order
/// the axiom names them, plus any scalars (α for [N3], (a, δa) for scalar
/// continuity).
struct TestCase {
  std::vector<Vector> vectors;
  std::vector<double> scalars;

  friend bool operator==(const TestCase&, const TestCase&) = default;
};

/// excess > 0 means the axiom's inequality is broken by that amount; scale
/// is the operand magnitude the tolerance is relative to.
struct Outcome {
  double excess = 0.0;
  double scale = 0.0;

  bool violates() const { return normalized() > kBaseTolerance; }
  /// excess normalized by max(1, scale); comparable against kBaseTolerance.
  double normalized() const;
};

struct AxiomReport {
  AxiomId axiom = AxiomId::N1;
  std::size_t samples = 0;
  bool passed = true;
  double worst_violation = 0.0;
  std::optional<TestCase> counterexample;
  std::uint64_t seed = 0;
};

struct SamplingOptions {
  /// Standard deviation of sampled coordinates.
  double scale = 1.0;
};

/// [N1]–[N5], one report each.
std::vector<AxiomReport> check_gnorm_axioms(const GNormSpace& space, std::size_t n_samples,
                                            std::uint64_t seed, SamplingOptions opts = {});

/// [G1]–[G5] for an arbitrary G-metric.
std::vector<AxiomReport> check_gmetric_axioms(const GMetric& metric, std::size_t n_samples,
                                              std::uint64_t seed, SamplingOptions opts = {});

/// [G1]–[G5] for G(x,y,z) = ‖x−y, y−z, z−x‖.
std::vector<AxiomReport> check_derived_gmetric(const GNormSpace& space, std::size_t n_samples,
                                               std::uint64_t seed, SamplingOptions opts = {});

AxiomReport check_reverse_inequality(const GNormSpace& space, std::size_t n_samples,
                                     std::uint64_t seed, SamplingOptions opts = {});

/// Metric axioms for d_G.
AxiomReport check_dg_metric(const GNormSpace& space, std::size_t n_samples, std::uint64_t seed,
                            SamplingOptions opts = {});

/// Index by which continuity residuals must fall below tolerance, and the
/// length of each probe sequence.
inline constexpr std::size_t kContinuityDeadline = 40;
inline constexpr std::size_t kContinuitySteps = 48;
/// Scalar and norm residuals carry a second-order term in 2^{-n}, so they
/// are required to be monotone only from this index on. Addition residuals
/// are monotone from n = 0.
inline constexpr std::size_t kContinuityBurnIn = 20;

/// Probes continuity of addition, scalar multiplication and the G-norm along
/// geometric sequences x + 2^{-n}·d. Reports CONT_ADD, CONT_SCALAR, CONT_NORM.
std::vector<AxiomReport> check_continuity(const GNormSpace& space, std::size_t n_sequences,
                                          std::uint64_t seed, SamplingOptions opts = {});

/// Residual sequences of one continuity probe, exposed for inspection.
struct ContinuityTrace {
  std::vector<double> addition;
  std::vector<double> scalar;
  std::vector<double> norm;
  /// ‖x_n−x, y_n−y, z_n−z‖, which bounds `norm` termwise.
  std::vector<double> norm_envelope;
};

/// vectors = {x, y, z, d_x, d_y, d_z}, scalars = {a, δa}.
ContinuityTrace continuity_trace(const GNormSpace& space, const TestCase& probe);

/// Sampled lower bound on the best K with ‖F x, F y, F z‖_Y ≤ K ‖x, y, z‖_X.
/// Throws SamplingError when every denominator is degenerate.
double boundedness_estimate(const GNormSpace& space_x, const GNormSpace& space_y,
                            const Mapping& f, std::size_t n_samples, std::uint64_t seed);

/// max over sampled x of G(T(S(x)), S(T(x)), S(T(x))).
double commutativity_residual(const GNormSpace& space, const Mapping& t, const Mapping& s,
                              std::size_t n_samples, std::uint64_t seed);

struct Counterexample {
  AxiomId axiom = AxiomId::N1;
  std::size_t trial = 0;
  TestCase original;
  TestCase shrunk;
  Outcome outcome;  // of `shrunk`
  /// Every accepted shrink candidate, in order; each still violates.
  std::vector<TestCase> shrink_path;
};

inline constexpr std::size_t kMaxShrinkRounds = 60;

/// First violating trial, shrunk by zeroing or halving single coordinates.
/// A shrink is kept only while the case still violates and its violation
/// relative to its own scale does not decrease.
std::optional<Counterexample> counterexample_search(const GNormSpace& space, AxiomId axiom,
                                                    std::size_t n_samples, std::uint64_t seed,
                                                    SamplingOptions opts = {});

/// G-metric axioms only (G1–G5).
std::optional<Counterexample> counterexample_search(const GMetric& metric, AxiomId axiom,
                                                    std::size_t n_samples, std::uint64_t seed,
                                                    SamplingOptions opts = {});

/// Evaluates one test case against an axiom of the space (N*, REV_INEQ,
/// CONT_*, METRIC_DG, and G* on the derived G-metric).
Outcome evaluate_case(const GNormSpace& space, AxiomId axiom, const TestCase& tc);
Outcome evaluate_case(const GMetric& metric, AxiomId axiom, const TestCase& tc);

}  // namespace gnorm
