#pragma once

#include "hsd/distribution.hpp"
#include "hsd/rational.hpp"

namespace hsd::fixtures {

inline Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

/// F_X = 809/900 d_{2/9} + 91/900 d_1 (eps = 1/100).
inline DiscreteDistribution example_x() { return make_distribution({{q(2, 9), q(809, 900)}, {q(1), q(91, 900)}}); }
/// F_Y = d_0 / 3 + 2 d_{4/9} / 3.
inline DiscreteDistribution example_y() { return make_distribution({{q(0), q(1, 3)}, {q(4, 9), q(2, 3)}}); }

inline DiscreteDistribution point(std::int64_t n, std::int64_t d = 1) { return DiscreteDistribution::point_mass(q(n, d)); }

}  // namespace hsd::fixtures
