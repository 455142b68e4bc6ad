#pragma once

#include "hsd/distribution.hpp"
#include "hsd/iterated_cdf.hpp"
#include "hsd/real_roots.hpp"

#include <optional>
#include <variant>

namespace hsd {

/// D(eta) = F_Y^{[n]}(eta) - F_X^{[n]}(eta) = gap < 0.
struct PointwiseViolation {
  Rational eta;
  Rational gap;
  friend bool operator==(const PointwiseViolation&, const PointwiseViolation&) = default;
};

/// E[(b - X)^{k-1}] = lhs > rhs = E[(b - Y)^{k-1}].
struct BoundaryViolation {
  unsigned k = 0;
  Rational lhs;
  Rational rhs;
  friend bool operator==(const BoundaryViolation&, const BoundaryViolation&) = default;
};

/// A required moment equality lhs == rhs failed. Raw moments E[X^k] vs E[Y^k]
/// on the real line; shifted moments E[(b - X)^{k-1}] vs E[(b - Y)^{k-1}] on
/// an interval.
struct MomentMismatch {
  unsigned k = 0;
  Rational lhs;
  Rational rhs;
  friend bool operator==(const MomentMismatch&, const MomentMismatch&) = default;
};

using Witness = std::variant<PointwiseViolation, BoundaryViolation, MomentMismatch>;

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const { return holds; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// X >=_n Y on the real line: F_X^{[n]} <= F_Y^{[n]} everywhere.
Verdict check_nsd_real(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n);

/// X >=_n^{[a,b]} Y: D >= 0 on [a,b] and E[(b-X)^{k-1}] <= E[(b-Y)^{k-1}]
/// for k = 1..n. Throws Error(SupportOutsideInterval) unless both supports lie
/// in [a,b], Error(BadIntervals) unless a < b.
Verdict check_nsd_interval(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n,
                           const Rational& a, const Rational& b);

/// (n,m)-SD on the real line: nSD plus E[X^k] == E[Y^k] for k = 1..m.
/// Throws Error(BadDegrees) when m > n - 1.
Verdict check_nmsd_real(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n, unsigned m);

/// (n,m)-SD on [a,b]: nSD on [a,b] plus equal boundary values for k = 1..m+1.
Verdict check_nmsd_interval(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n, unsigned m,
                            const Rational& a, const Rational& b);

/// The n boundary rows (k, E[(b-X)^{k-1}], E[(b-Y)^{k-1}]) for k = 1..n.
struct BoundaryRow {
  unsigned k;
  Rational lhs;
  Rational rhs;
};
std::vector<BoundaryRow> boundary_table(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n,
                                        const Rational& b);

/// Scope of a check: the real line, or a finite interval [a,b].
struct Scope {
  std::optional<std::pair<Rational, Rational>> interval;

  static Scope real() { return {}; }
  static Scope on(const Rational& a, const Rational& b) { return {std::make_pair(a, b)}; }
  bool is_real() const { return !interval.has_value(); }
};

/// Dispatches to the matching check above (m = 0 means plain nSD).
Verdict check(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n, unsigned m, const Scope& scope);

/// Recomputes a failure witness from scratch: true iff it reproduces exactly.
bool witness_reproduces(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n, const Scope& scope,
                        const Witness& w);

}  // namespace hsd
