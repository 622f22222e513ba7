#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>

#include "gnorm/vector.hpp"

namespace gnorm {

/// SplitMix64 generator. Satisfies UniformRandomBitGenerator; cheap enough to
/// construct once per trial so each trial owns an independent stream.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Generator for trial `index` of a run seeded with `seed` (seed xor index,
/// then mixed so adjacent trials are decorrelated).
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 mixer(seed ^ index);
  return SplitMix64(mixer());
}

template <class Rng>
Vector gaussian_vector(Rng& rng, std::size_t dim, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Vector v(dim);
  for (double& c : v) c = normal(rng);
  return v;
}

/// Uniform sample from the axis-aligned box center ± half_width.
template <class Rng>
Vector uniform_box_vector(Rng& rng, const Vector& center, double half_width) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Vector v(center.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = center[i] + half_width * unit(rng);
  return v;
}

}  // namespace gnorm
