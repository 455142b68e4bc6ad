#include "hsd/random.hpp"

namespace hsd {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::unit_rational(std::uint64_t max_den) {
  const auto den = static_cast<std::int64_t>(1 + below(max_den));
  const auto num = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(den) + 1));
  return make_rational(num, den);
}

Rational Rng::rational_in(const Rational& lo, const Rational& hi, std::uint64_t max_den) {
  return lo + (hi - lo) * unit_rational(max_den);
}

bool Rng::chance(const Rational& probability) {
  if (sgn(probability) <= 0) return false;
  if (probability >= 1) return true;
  const Integer& den = probability.get_den();
  if (!den.fits_ulong_p()) return false;
  return Integer(static_cast<unsigned long>(below(den.get_ui()))) < probability.get_num();
}

}  // namespace hsd
