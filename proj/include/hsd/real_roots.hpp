#pragma once

#include "hsd/polynomial.hpp"
#include "hsd/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hsd {

/// Closed interval with optionally infinite ends. An absent endpoint means
/// -inf (lo) or +inf (hi); infinities are never stored as Rational values.
struct RealInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static RealInterval closed(const Rational& a, const Rational& b);
  static RealInterval whole_line() { return {}; }
  static RealInterval at_least(const Rational& a) { return {a, std::nullopt}; }
  static RealInterval at_most(const Rational& b) { return {std::nullopt, b}; }

  bool is_finite() const { return lo.has_value() && hi.has_value(); }
  bool contains(const Rational& x) const;
  std::string to_string() const;
};

/// 1 + max |c_i / c_deg|; every real root lies strictly inside (-B, B).
Rational cauchy_bound(const Polynomial& p);

/// Sturm chain p, p', -rem(p, p'), ... for a nonzero p.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Sign changes of the chain at x, zeros skipped.
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);

/// Number of distinct real roots of p in (lo, hi]. Infinite ends are replaced
/// by the Cauchy bound. Throws Error(ZeroPolynomial) on p == 0.
int count_real_roots(const Polynomial& p, const RealInterval& iv);

/// Disjoint half-open intervals (l, r], each holding exactly one distinct real
/// root of p, covering every root in (lo, hi] of the (Cauchy-clipped) interval.
struct IsolatingInterval {
  Rational left;
  Rational right;
};
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const RealInterval& iv);

struct NonnegativityResult {
  bool nonnegative = true;
  /// Set exactly when !nonnegative: a point of the interval where p < 0.
  std::optional<Rational> witness;

  explicit operator bool() const { return nonnegative; }
};

/// Decides p(x) >= 0 for every x in iv, exactly.
NonnegativityResult is_nonnegative_on(const Polynomial& p, const RealInterval& iv);

}  // namespace hsd
