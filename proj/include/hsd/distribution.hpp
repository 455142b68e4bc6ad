#pragma once

#include "hsd/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace hsd {

struct Atom {
  Rational x;
  Rational p;

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct SupportBounds {
  Rational min;
  Rational max;
};

/// Finitely-supported probability distribution with exact atoms, strictly
/// increasing positions, positive probabilities summing to exactly one.
/// Immutable once built.
class DiscreteDistribution {
 public:
  /// Merges equal positions, drops zero masses, sorts. Throws
  /// Error(NegativeProbability | Empty | MassNotOne).
  static DiscreteDistribution from_pairs(std::span<const std::pair<Rational, Rational>> pairs);
  static DiscreteDistribution point_mass(const Rational& x);

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const SupportBounds& support() const { return support_; }

  friend bool operator==(const DiscreteDistribution& a, const DiscreteDistribution& b) {
    return a.atoms_ == b.atoms_;
  }

 private:
  explicit DiscreteDistribution(std::vector<Atom> atoms);

  std::vector<Atom> atoms_;
  SupportBounds support_;
};

DiscreteDistribution make_distribution(std::span<const std::pair<Rational, Rational>> pairs);
DiscreteDistribution make_distribution(std::initializer_list<std::pair<Rational, Rational>> pairs);

/// E[X^k]; k = 0 gives 1.
Rational raw_moment(const DiscreteDistribution& d, unsigned k);

/// E[(b - X)^k], signed (no positive part).
Rational shifted_moment(const DiscreteDistribution& d, const Rational& b, unsigned k);

/// E[(eta - X)_+^k] = sum over atoms x <= eta of p (eta - x)^k, k >= 1.
Rational lower_partial_moment(const DiscreteDistribution& d, const Rational& eta, unsigned k);

/// P[X <= eta].
Rational cdf(const DiscreteDistribution& d, const Rational& eta);

/// Law of scale * X + shift. Throws Error(ZeroScale) when scale == 0.
DiscreteDistribution affine_transform(const DiscreteDistribution& d, const Rational& scale, const Rational& shift);

/// Mixture weight * d + (1 - weight) * e, weight in [0, 1].
DiscreteDistribution mixture(const DiscreteDistribution& d, const DiscreteDistribution& e, const Rational& weight);

bool support_within(const DiscreteDistribution& d, const Rational& a, const Rational& b);

}  // namespace hsd
