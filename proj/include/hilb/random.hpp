#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

namespace hilb {

/// Seeded generator with platform-independent draws. std::uniform_int_distribution
/// is implementation-defined, so ranges use rejection sampling on the raw engine.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == UINT64_MAX) return next();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return lo + v % range;
  }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform(0, static_cast<std::uint64_t>(hi - lo)));
  }

  bool coin() { return next() >> 63; }

  /// p/q with |p| <= num_bound, 1 <= q <= den_bound.
  mpq_class rational(long num_bound, long den_bound = 1) {
    mpq_class r(uniform_int(-num_bound, num_bound), uniform_int(1, den_bound));
    r.canonicalize();
    return r;
  }

  /// Independent stream for sample i of a run; keeps parallel scans deterministic.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hilb
