#pragma once

#include "hsd/distribution.hpp"

#include <map>
#include <optional>
#include <string>

namespace hsd {

/// A pair of laws produced by one of the named constructions, with the
/// parameters that reproduce it.
struct ConstructedPair {
  DiscreteDistribution x;
  DiscreteDistribution y;
  std::map<std::string, Rational> params;
  std::string provenance;
};

/// X = (8/9 + eps) d_{2/9} + (1/9 - eps) d_1, Y = d_0/3 + 2 d_{4/9}/3 on [0,1].
/// Requires 0 < eps < 1/9 (Error(EpsilonOutOfRange)).
ConstructedPair example_counter_pair(const Rational& eps);

/// eps = m / (54 (1 + m)); X = (8/9 + eps) d_2 + (1/9 - eps) d_{8+m},
/// Y = d_0/3 + 2 d_4/3 on [0,9]. Requires 0 < m < 1 (Error(MOutOfRange)).
ConstructedPair lemma_sequence_pair(const Rational& m);

/// (E[X^2] - E[Y^2]) / (E[X] - E[Y]) for lemma_sequence_pair(m), from the
/// closed form in m and eps.
Rational lemma_ratio(const Rational& m);

/// Maps both laws by x -> lambda x + shift taking [a,b] onto [c,d].
/// Error(BadIntervals) unless a < b and c < d; Error(SupportOutsideInterval)
/// unless the pair lives in [a,b].
ConstructedPair rescale_pair(const ConstructedPair& pair, const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d);

/// Scales both laws by gamma = 2d / ratio, ratio = (E[X^2]-E[Y^2])/(E[X]-E[Y]),
/// so that E[(c-X)^2] > E[(c-Y)^2] and E[(d-X)^2] <= E[(d-Y)^2] (equality).
/// Requires nonnegative supports, E[X] > E[Y], ratio >= 2d, 0 <= c < d.
ConstructedPair gamma_scaled_pair(const ConstructedPair& pair, const Rational& c, const Rational& d);

/// First m = 1/2^j (j = 1..max_halvings) for which lemma_sequence_pair(m)
/// satisfies X >=_4 Y on the real line and lemma_ratio(m) >= min_ratio.
/// Empty when none is found within the budget.
std::optional<Rational> lemma_threshold(const Rational& min_ratio = Rational(0), unsigned max_halvings = 40);

/// Lemma pair shrunk until its ratio reaches 2d, then gamma-scaled: fails
/// 4SD on [0,c] and holds on [0,d]. Requires 9 <= c < d.
ConstructedPair interval_counter_pair(const Rational& c, const Rational& d);

}  // namespace hsd
