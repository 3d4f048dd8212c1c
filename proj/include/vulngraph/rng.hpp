#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

// Seeded randomness helpers. std::mt19937_64 is fully specified by the
// standard, but the stdlib *distributions* are not, so every draw that must
// be reproducible across toolchains goes through the functions below.

namespace vulngraph::rng {

using Engine = std::mt19937_64;

// splitmix64 finalizer; used to derive independent stream seeds.
inline constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix64(base ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

inline Engine make_engine(std::uint64_t seed) { return Engine(seed); }

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(Engine& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(eng);
}

// Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
inline std::uint64_t bounded(Engine& eng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x = eng();
  while (x >= limit) x = eng();
  return x % n;
}

// Standard normal via Box-Muller (one value per call, second discarded).
inline double normal(Engine& eng) {
  double u1 = uniform01(eng);
  while (u1 <= 0.0) u1 = uniform01(eng);
  const double u2 = uniform01(eng);
  const double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

// Fisher-Yates.
template <class T>
void shuffle(std::vector<T>& v, Engine& eng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[bounded(eng, i)]);
  }
}

}  // namespace vulngraph::rng
