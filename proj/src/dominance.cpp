#include "hsd/dominance.hpp"

#include "hsd/error.hpp"

#include <algorithm>

namespace hsd {

namespace {

std::vector<Rational> merged_support(const DiscreteDistribution& x, const DiscreteDistribution& y) {
  std::vector<Rational> pts;
  for (const auto& a : x.atoms()) pts.push_back(a.x);
  for (const auto& a : y.atoms()) pts.push_back(a.x);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void require_order(unsigned n) {
  if (n < 1) throw Error(ErrorCode::OrderTooSmall, "dominance order must be >= 1");
}

void require_interval(const DiscreteDistribution& x, const DiscreteDistribution& y, const Rational& a,
                      const Rational& b) {
  if (!(a < b)) throw Error(ErrorCode::BadIntervals, "reference interval needs a < b");
  if (!support_within(x, a, b) || !support_within(y, a, b)) {
    throw Error(ErrorCode::SupportOutsideInterval,
                "support not contained in " + RealInterval::closed(a, b).to_string());
  }
}

// Step-function comparison: both CDFs are constant between support points.
Verdict first_order(const DiscreteDistribution& x, const DiscreteDistribution& y) {
  for (const auto& t : merged_support(x, y)) {
    const Rational gap = cdf(y, t) - cdf(x, t);
    if (sgn(gap) < 0) return Verdict::fail(PointwiseViolation{t, gap});
  }
  return Verdict::pass();
}

// D >= 0 on [lo, +inf) (hi absent) or [lo, hi]; left of the first breakpoint D = 0.
Verdict pointwise(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n,
                  const std::optional<Rational>& hi) {
  if (n == 1) return first_order(x, y);
  const PiecewisePolynomial d = difference_pp(x, y, n);
  const auto& t = d.breakpoints;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const bool tail = i + 1 == t.size();
    RealInterval seg{t[i], tail ? hi : std::optional<Rational>(t[i + 1])};
    if (hi && seg.hi && *seg.hi > *hi) seg.hi = hi;
    if (seg.hi && *seg.lo > *seg.hi) break;
    const auto res = is_nonnegative_on(d.pieces[i], seg);
    if (!res) return Verdict::fail(PointwiseViolation{*res.witness, d.pieces[i](*res.witness)});
  }
  return Verdict::pass();
}

}  // namespace

Verdict check_nsd_real(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n) {
  require_order(n);
  return pointwise(x, y, n, std::nullopt);
}

std::vector<BoundaryRow> boundary_table(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n,
                                        const Rational& b) {
  std::vector<BoundaryRow> rows;
  rows.reserve(n);
  for (unsigned k = 1; k <= n; ++k) rows.push_back({k, shifted_moment(x, b, k - 1), shifted_moment(y, b, k - 1)});
  return rows;
}

Verdict check_nsd_interval(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n,
                           const Rational& a, const Rational& b) {
  require_order(n);
  require_interval(x, y, a, b);
  if (Verdict v = pointwise(x, y, n, b); !v) return v;
  for (auto& row : boundary_table(x, y, n, b)) {
    if (row.lhs > row.rhs) return Verdict::fail(BoundaryViolation{row.k, std::move(row.lhs), std::move(row.rhs)});
  }
  return Verdict::pass();
}

Verdict check_nmsd_real(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n, unsigned m) {
  require_order(n);
  if (m > n - 1) throw Error(ErrorCode::BadDegrees, "need m <= n - 1");
  for (unsigned k = 1; k <= m; ++k) {
    Rational lhs = raw_moment(x, k);
    Rational rhs = raw_moment(y, k);
    if (lhs != rhs) return Verdict::fail(MomentMismatch{k, std::move(lhs), std::move(rhs)});
  }
  return check_nsd_real(x, y, n);
}

Verdict check_nmsd_interval(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n, unsigned m,
                            const Rational& a, const Rational& b) {
  require_order(n);
  if (m > n - 1) throw Error(ErrorCode::BadDegrees, "need m <= n - 1");
  require_interval(x, y, a, b);
  for (unsigned k = 1; k <= m + 1; ++k) {
    Rational lhs = shifted_moment(x, b, k - 1);
    Rational rhs = shifted_moment(y, b, k - 1);
    if (lhs != rhs) return Verdict::fail(MomentMismatch{k, std::move(lhs), std::move(rhs)});
  }
  return check_nsd_interval(x, y, n, a, b);
}

Verdict check(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n, unsigned m,
              const Scope& scope) {
  if (scope.is_real()) return check_nmsd_real(x, y, n, m);
  return check_nmsd_interval(x, y, n, m, scope.interval->first, scope.interval->second);
}

bool witness_reproduces(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n, const Scope& scope,
                        const Witness& w) {
  struct Visitor {
    const DiscreteDistribution& x;
    const DiscreteDistribution& y;
    unsigned n;
    const Scope& scope;

    bool operator()(const PointwiseViolation& v) const {
      if (!scope.is_real() && (v.eta < scope.interval->first || v.eta > scope.interval->second)) return false;
      const Rational gap = iterated_cdf_at(y, n, v.eta) - iterated_cdf_at(x, n, v.eta);
      return gap == v.gap && sgn(gap) < 0;
    }
    bool operator()(const BoundaryViolation& v) const {
      if (scope.is_real() || v.k < 1 || v.k > n) return false;
      const Rational& b = scope.interval->second;
      return shifted_moment(x, b, v.k - 1) == v.lhs && shifted_moment(y, b, v.k - 1) == v.rhs && v.lhs > v.rhs;
    }
    bool operator()(const MomentMismatch& v) const {
      if (v.k < 1 || v.k > n) return false;
      if (scope.is_real()) return raw_moment(x, v.k) == v.lhs && raw_moment(y, v.k) == v.rhs && v.lhs != v.rhs;
      const Rational& b = scope.interval->second;
      return shifted_moment(x, b, v.k - 1) == v.lhs && shifted_moment(y, b, v.k - 1) == v.rhs && v.lhs != v.rhs;
    }
  };
  return std::visit(Visitor{x, y, n, scope}, w);
}

}  // namespace hsd
