#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "gnorm/core.hpp"
#include "gnorm/error.hpp"
#include "gnorm/random.hpp"
#include "gnorm/spaces.hpp"
#include "oracles.hpp"

namespace gnorm {
namespace {

const GNormSpace kSumAbs1 = make_sum_space(1, 1.0);
const GNormSpace kSumEuclid2 = make_sum_space(2, 2.0);

Vector v1(double x) { return Vector{x}; }

TEST(GNormEval, SingleEuclideanArgument) {
  EXPECT_DOUBLE_EQ(gnorm_eval(kSumEuclid2, {3, 4}, {0, 0}, {0, 0}), 5.0);
}

TEST(GNormEval, ZeroTripleIsZero) {
  for (const auto& sp : {kSumAbs1, kSumEuclid2, make_grid_space(11), make_max_candidate(3)}) {
    const Vector z = sp.zero();
    EXPECT_EQ(gnorm_eval(sp, z, z, z), 0.0);
  }
}

TEST(GNormEval, GridComplementaryLines) {
  const auto grid = make_grid_space(101);
  const Vector f = sample_on_grid(101, [](double t) { return t; });
  const Vector g = sample_on_grid(101, [](double t) { return 1.0 - t; });
  const double expected =
      oracle::grid_max_sum(101, [](double t) { return t; }, [](double t) { return 1.0 - t; },
                          [](double) { return 0.0; });
  EXPECT_NEAR(expected, 1.0, 1e-15);
  EXPECT_NEAR(gnorm_eval(grid, f, g, grid.zero()), expected, 1e-15);
}

TEST(GNormEval, RejectsDimensionMismatch) {
  EXPECT_THROW(gnorm_eval(kSumEuclid2, {1, 2}, {1}, {0, 0}), InputError);
  EXPECT_THROW(induced_norm(kSumEuclid2, {1, 2, 3}), InputError);
}

TEST(GNormEval, RejectsNonFinite) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(gnorm_eval(kSumAbs1, v1(nan), v1(0), v1(0)), InputError);
  EXPECT_THROW(derived_gmetric(kSumAbs1, v1(0), v1(inf), v1(0)), InputError);
}

TEST(InducedNorm, Examples) {
  EXPECT_DOUBLE_EQ(induced_norm(kSumEuclid2, {3, 4}), 5.0);
  EXPECT_EQ(induced_norm(kSumEuclid2, {0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(induced_norm(kSumAbs1, v1(-2)), 2.0);
}

TEST(InducedNorm, HomogeneousSubadditiveDefinite) {
  for (const auto& sp : {kSumEuclid2, make_sum_space(3, 1.5), make_grid_space(17)}) {
    for (std::uint64_t i = 0; i < 2000; ++i) {
      auto rng = trial_rng(7, i);
      const Vector x = gaussian_vector(rng, sp.dim());
      const Vector y = gaussian_vector(rng, sp.dim());
      const double alpha = std::normal_distribution<double>(0.0, 10.0)(rng);
      const double nx = induced_norm(sp, x);
      EXPECT_NEAR(induced_norm(sp, alpha * x), std::abs(alpha) * nx, 1e-12 * std::abs(alpha) * nx);
      EXPECT_LE(induced_norm(sp, x + y), nx + induced_norm(sp, y) + tolerance({nx}));
      EXPECT_GT(nx, 0.0);
    }
  }
}

TEST(DerivedGMetric, Examples) {
  EXPECT_DOUBLE_EQ(derived_gmetric(kSumAbs1, v1(1), v1(2), v1(4)), 6.0);
  EXPECT_EQ(derived_gmetric(kSumEuclid2, {1, 2}, {1, 2}, {1, 2}), 0.0);
  EXPECT_DOUBLE_EQ(derived_gmetric(kSumAbs1, v1(0), v1(1), v1(1)), 2.0);
}

TEST(DerivedGMetric, MatchesOneDimensionalOracle) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = trial_rng(3, i);
    const Vector p = gaussian_vector(rng, 3);
    EXPECT_DOUBLE_EQ(derived_gmetric(kSumAbs1, v1(p[0]), v1(p[1]), v1(p[2])),
                     oracle::gmetric_1d(p[0], p[1], p[2]));
  }
}

TEST(DgMetric, Examples) {
  EXPECT_DOUBLE_EQ(dg_metric(kSumAbs1, v1(1), v1(3)), 8.0);
  EXPECT_EQ(dg_metric(kSumAbs1, v1(3), v1(3)), 0.0);
  EXPECT_DOUBLE_EQ(dg_metric(kSumEuclid2, {0, 0}, {3, 4}), 20.0);
}

TEST(DgMetric, MetricAxiomsOnSamples) {
  for (std::uint64_t i = 0; i < 5000; ++i) {
    auto rng = trial_rng(11, i);
    const Vector x = gaussian_vector(rng, 2), y = gaussian_vector(rng, 2),
                 z = gaussian_vector(rng, 2);
    const double xy = dg_metric(kSumEuclid2, x, y);
    EXPECT_EQ(dg_metric(kSumEuclid2, x, x), 0.0);
    EXPECT_NEAR(xy, dg_metric(kSumEuclid2, y, x), tolerance({xy}));
    EXPECT_GT(xy, 0.0);
    const double rhs = xy + dg_metric(kSumEuclid2, y, z);
    EXPECT_LE(dg_metric(kSumEuclid2, x, z), rhs + tolerance({rhs}));
  }
}

TEST(ReverseGap, Examples) {
  const Vector a = v1(1), b = v1(2), c = v1(3), z = v1(0);
  EXPECT_EQ(reverse_gap(kSumAbs1, a, b, c, a, b, c), 0.0);
  EXPECT_DOUBLE_EQ(reverse_gap(kSumAbs1, a, z, z, z, z, z), 0.0);
  // ‖−2,0,2‖ − |6 − 6| = 4
  EXPECT_DOUBLE_EQ(reverse_gap(kSumAbs1, a, b, c, c, b, a), 4.0);
}

SequenceWindow orbit_window(std::initializer_list<int> indices) {
  SequenceWindow w;
  w.start_index = *indices.begin();
  for (int n : indices) w.points.push_back(v1(oracle::halving_orbit(n)));
  return w;
}

TEST(ConvergenceResidual, HalvingOrbit) {
  EXPECT_DOUBLE_EQ(convergence_residual(kSumAbs1, orbit_window({3}), v1(2)), 0.75);
  EXPECT_DOUBLE_EQ(convergence_residual(kSumAbs1, orbit_window({5}), v1(2)), 0.1875);
}

TEST(ConvergenceResidual, ConstantSequence) {
  SequenceWindow w{{Vector{1, 2}, Vector{1, 2}, Vector{1, 2}}, 0};
  EXPECT_EQ(convergence_residual(kSumEuclid2, w, {1, 2}), 0.0);
  EXPECT_THROW(convergence_residual(kSumEuclid2, SequenceWindow{}, {1, 2}), InputError);
}

TEST(CauchyResidual, ExactMatchesBruteForce) {
  const auto w = orbit_window({3, 4, 5});
  std::vector<double> xs;
  for (const auto& p : w.points) xs.push_back(p[0]);
  const double brute = oracle::cauchy_brute_force_1d(xs);
  EXPECT_DOUBLE_EQ(brute, 0.375);
  EXPECT_DOUBLE_EQ(cauchy_residual(kSumAbs1, w, CauchyMode::exact), brute);
  EXPECT_GE(cauchy_residual(kSumAbs1, w, CauchyMode::pairwise_bound), brute);
}

TEST(CauchyResidual, ConstantSequenceBothModes) {
  SequenceWindow w{{Vector{4, -1}, Vector{4, -1}}, 0};
  EXPECT_EQ(cauchy_residual(kSumEuclid2, w, CauchyMode::exact), 0.0);
  EXPECT_EQ(cauchy_residual(kSumEuclid2, w, CauchyMode::pairwise_bound), 0.0);
}

TEST(CauchyResidual, NeedsTwoPoints) {
  SequenceWindow w{{Vector{1, 1}}, 0};
  EXPECT_THROW(cauchy_residual(kSumEuclid2, w), InputError);
}

TEST(CauchyResidual, ExactNeverExceedsPairwiseBound) {
  for (const auto& sp : {kSumEuclid2, make_grid_space(9), make_sum_space(3, kInfinityNorm)}) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      auto rng = trial_rng(5, i);
      SequenceWindow w;
      const std::size_t len = 2 + i % 7;
      for (std::size_t k = 0; k < len; ++k) w.points.push_back(gaussian_vector(rng, sp.dim()));
      const double exact = cauchy_residual(sp, w, CauchyMode::exact);
      const double bound = cauchy_residual(sp, w, CauchyMode::pairwise_bound);
      EXPECT_LE(exact, bound + tolerance({bound}));
    }
  }
}

TEST(CauchyResidual, AutomaticSwitchesAtLimit) {
  SequenceWindow w;
  for (std::size_t k = 0; k < kCauchyExactLimit + 1; ++k) {
    w.points.push_back(v1(oracle::halving_orbit(static_cast<int>(k))));
  }
  EXPECT_DOUBLE_EQ(cauchy_residual(kSumAbs1, w),
                   cauchy_residual(kSumAbs1, w, CauchyMode::pairwise_bound));
  w.points.pop_back();
  EXPECT_DOUBLE_EQ(cauchy_residual(kSumAbs1, w), cauchy_residual(kSumAbs1, w, CauchyMode::exact));
}

TEST(Tolerance, ScalesWithMagnitude) {
  EXPECT_DOUBLE_EQ(tolerance({0.5, 0.1}), 1e-9);
  EXPECT_DOUBLE_EQ(tolerance({1e3, -2e3}), 2e-6);
}

}  // namespace
}  // namespace gnorm
