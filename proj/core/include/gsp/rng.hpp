#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gsp {

/// Mixes a master seed with up to three stream labels into an independent
/// substream seed. Derived streams are stable across platforms and
/// independent of evaluation order, which is what makes seeded sweeps
/// reproducible under any thread count.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t a = 0,
                             std::uint64_t b = 0, std::uint64_t c = 0);

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

/// Unbiased draw from {0, ..., bound-1}. Hand-rolled rejection sampling so
/// that identical seeds give identical draws on every standard library.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound);

/// Uniform double in (0, 1].
double uniform_unit(std::mt19937_64& gen);

/// Standard normal via Box-Muller on the portable uniform above.
double standard_normal(std::mt19937_64& gen);

/// Uniform random m-subset of {0, ..., n-1}, returned sorted ascending.
std::vector<int> random_subset(std::mt19937_64& gen, int n, int m);

}  // namespace gsp
