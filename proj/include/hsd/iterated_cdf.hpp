#pragma once

#include "hsd/distribution.hpp"
#include "hsd/polynomial.hpp"

#include <vector>

namespace hsd {

/// Function that vanishes left of breakpoints.front() and equals pieces[i] on
/// [breakpoints[i], breakpoints[i+1]); the last piece is the tail on
/// [breakpoints.back(), +inf).
struct PiecewisePolynomial {
  std::vector<Rational> breakpoints;
  std::vector<Polynomial> pieces;

  /// Index of the piece covering eta, or -1 left of the first breakpoint.
  int piece_index(const Rational& eta) const;
  Rational operator()(const Rational& eta) const;
  bool is_identically_zero() const;
};

/// F^{[n]} of a discrete law, n >= 2, as a piecewise polynomial of degree
/// n - 1 with breakpoints at the atoms.
struct IteratedCdf {
  unsigned order = 2;
  PiecewisePolynomial curve;

  Rational operator()(const Rational& eta) const { return curve(eta); }
};

/// Throws Error(OrderTooSmall) for n < 2.
IteratedCdf iterated_cdf(const DiscreteDistribution& d, unsigned n);

/// Closed form: P[X <= eta] for n = 1, E[(eta - X)_+^{n-1}] / (n-1)! above.
Rational iterated_cdf_at(const DiscreteDistribution& d, unsigned n, const Rational& eta);

/// F_Y^{[n]} - F_X^{[n]} over the merged breakpoints of both supports.
PiecewisePolynomial difference_pp(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n);

}  // namespace hsd
