#include "gsp/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsp/errors.hpp"

namespace gsp {

namespace {

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t a,
                             std::uint64_t b, std::uint64_t c) {
  std::uint64_t s = mix64(master);
  s = mix64(s ^ a);
  s = mix64(s ^ b);
  s = mix64(s ^ c);
  return s;
}

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  if (bound == 0) fail(Errc::size_out_of_range, "uniform_below: bound must be positive");
  // Accept only draws below the largest multiple of bound.
  const std::uint64_t rem = (UINT64_MAX % bound + 1) % bound;
  const std::uint64_t limit = UINT64_MAX - rem;
  std::uint64_t x;
  do {
    x = gen();
  } while (x > limit);
  return x % bound;
}

double uniform_unit(std::mt19937_64& gen) {
  // 53 random bits, shifted into (0, 1]
  return (static_cast<double>(gen() >> 11) + 1.0) * 0x1p-53;
}

double standard_normal(std::mt19937_64& gen) {
  const double u1 = uniform_unit(gen);
  const double u2 = uniform_unit(gen);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<int> random_subset(std::mt19937_64& gen, int n, int m) {
  if (m < 0 || m > n)
    fail(Errc::size_out_of_range, "random_subset: need 0 <= m <= n");
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  // partial Fisher-Yates
  for (int i = 0; i < m; ++i) {
    const int j = i + static_cast<int>(uniform_below(gen, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace gsp
