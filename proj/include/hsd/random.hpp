#pragma once

#include "hsd/rational.hpp"

#include <cstdint>
#include <random>

namespace hsd {

/// splitmix64 finalizer; derives independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic generator for one (seed, stream). Draws avoid
/// std::uniform_*_distribution so the sequence is identical on every
/// standard library.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(mix_seed(seed, stream)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// Uniform rational k / den, k in [0, den], den drawn from [1, max_den].
  Rational unit_rational(std::uint64_t max_den);
  /// lo + (hi - lo) * unit_rational(max_den).
  Rational rational_in(const Rational& lo, const Rational& hi, std::uint64_t max_den);
  /// True with probability num/den, num <= den.
  bool chance(const Rational& probability);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hsd
