#include <algorithm>
#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "gnorm/error.hpp"
#include "gnorm/random.hpp"
#include "gnorm/spaces.hpp"
#include "oracles.hpp"

namespace gnorm {
namespace {

TEST(SumSpace, Examples) {
  EXPECT_DOUBLE_EQ(make_sum_space(2, 2).eval({3, 4}, {0, 0}, {0, 0}), 5.0);
  EXPECT_DOUBLE_EQ(make_sum_space(1, 1).eval({1}, {2}, {3}), 6.0);
  EXPECT_DOUBLE_EQ(make_sum_space(2, 2).eval({1, 0}, {1, 0}, {1, 0}), 3.0);
}

TEST(SumSpace, RejectsBadParameters) {
  EXPECT_THROW(make_sum_space(2, 0.5), InputError);
  EXPECT_THROW(make_sum_space(0, 2), InputError);
  EXPECT_NO_THROW(make_sum_space(2, kInfinityNorm));
}

TEST(SumSpace, EuclideanMatchesOracle) {
  const auto sp = make_sum_space(4, 2);
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = trial_rng(1, i);
    const Vector x = gaussian_vector(rng, 4), y = gaussian_vector(rng, 4),
                 z = gaussian_vector(rng, 4);
    const double expected =
        oracle::euclid(x.data()) + oracle::euclid(y.data()) + oracle::euclid(z.data());
    EXPECT_NEAR(sp.eval(x, y, z), expected, 1e-14 * expected);
  }
}

TEST(PNorm, KnownValues) {
  EXPECT_DOUBLE_EQ(p_norm({3, -4}, 1), 7.0);
  EXPECT_DOUBLE_EQ(p_norm({3, -4}, 2), 5.0);
  EXPECT_DOUBLE_EQ(p_norm({3, -4}, kInfinityNorm), 4.0);
  EXPECT_NEAR(p_norm({1, 1}, 3), std::cbrt(2.0), 1e-15);
  EXPECT_EQ(p_norm({0, 0, 0}, 3), 0.0);
  // No overflow at extreme magnitudes.
  EXPECT_NEAR(p_norm({3e200, 4e200}, 2), 5e200, 1e186);
}

TEST(SumSpace, PermutationInvariantBitForBit) {
  for (const auto& sp : {make_sum_space(3, 2), make_sum_space(3, 1), make_grid_space(3)}) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      auto rng = trial_rng(2, i);
      const std::array<Vector, 3> v = {gaussian_vector(rng, 3), gaussian_vector(rng, 3),
                                       gaussian_vector(rng, 3)};
      std::array<int, 3> idx = {0, 1, 2};
      const double base = sp.eval(v[0], v[1], v[2]);
      while (std::next_permutation(idx.begin(), idx.end())) {
        EXPECT_EQ(sp.eval(v[idx[0]], v[idx[1]], v[idx[2]]), base);
      }
    }
  }
}

TEST(GridSpace, Examples) {
  const auto grid = make_grid_space(101);
  EXPECT_EQ(grid.dim(), 101u);
  const Vector zero = grid.zero();
  EXPECT_EQ(grid.eval(zero, zero, zero), 0.0);
  const Vector square = sample_on_grid(101, [](double t) { return t * t; });
  EXPECT_DOUBLE_EQ(grid.eval(square, zero, zero), 1.0);
  EXPECT_DOUBLE_EQ(square[100], 1.0);
}

TEST(GridSpace, MatchesOracleForSmoothFunctions) {
  const auto grid = make_grid_space(51);
  auto f = [](double t) { return std::sin(3 * t); };
  auto g = [](double t) { return t - 0.5; };
  auto h = [](double t) { return std::exp(-t); };
  EXPECT_NEAR(grid.eval(sample_on_grid(51, f), sample_on_grid(51, g), sample_on_grid(51, h)),
              oracle::grid_max_sum(51, f, g, h), 1e-15);
}

TEST(GridSpace, RejectsBadInput) {
  EXPECT_THROW(make_grid_space(1), InputError);
  const auto grid = make_grid_space(5);
  EXPECT_THROW(grid.eval(Vector(4), Vector(5), Vector(5)), InputError);
}

TEST(RhoOracle, Examples) {
  const GMetric rho = make_rho_oracle();
  EXPECT_EQ(rho({1}, {2}, {4}), 3.0);
  EXPECT_EQ(rho({7}, {7}, {7}), 0.0);
  EXPECT_EQ(rho({0}, {0}, {5}), 5.0);
  EXPECT_THROW(rho({0, 1}, {0, 1}, {0, 1}), InputError);
}

TEST(MaxCandidate, ViolatesMergeInequality) {
  const auto cand = make_max_candidate(1);
  EXPECT_EQ(cand.eval({1}, {1}, {0}), 1.0);
  EXPECT_EQ(cand.eval({2}, {0}, {0}), 2.0);
  EXPECT_EQ(cand.eval({0}, {0}, {0}), 0.0);
  EXPECT_EQ(cand.eval({3}, {1}, {2}), 3.0);
}

TEST(MakeSpace, DispatchesOnKind) {
  EXPECT_EQ(make_space({SpaceKind::sum_pnorm, 3, 1.0, 0}).dim(), 3u);
  EXPECT_EQ(make_space({SpaceKind::grid_maxsum, 0, 0.0, 33}).dim(), 33u);
  EXPECT_EQ(make_space({SpaceKind::max_candidate, 2, 2.0, 0}).kind(), SpaceKind::max_candidate);
  EXPECT_THROW(make_space({SpaceKind::custom, 2, 2.0, 0}), InputError);
  EXPECT_EQ(space_kind_from_string(to_string(SpaceKind::grid_maxsum)), SpaceKind::grid_maxsum);
  EXPECT_THROW(space_kind_from_string("bogus"), InputError);
}

}  // namespace
}  // namespace gnorm
