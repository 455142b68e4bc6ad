#include "hsd/utility.hpp"

#include "hsd/error.hpp"

#include <algorithm>

namespace hsd {

UtilityMixture::UtilityMixture(unsigned order, std::vector<Term> terms, Rational c0, Rational c1)
    : order_(order), terms_(std::move(terms)), c0_(std::move(c0)), c1_(std::move(c1)) {
  if (order_ < 2) throw Error(ErrorCode::InvalidArgument, "singularity utilities need order >= 2");
  if (sgn(c1_) < 0) throw Error(ErrorCode::InvalidArgument, "linear coefficient must be >= 0");
  for (const auto& t : terms_) {
    if (sgn(t.weight) <= 0) throw Error(ErrorCode::InvalidArgument, "mixture weights must be > 0");
  }
}

Rational UtilityMixture::operator()(const Rational& x) const {
  Rational u = c0_ + c1_ * x;
  for (const auto& t : terms_) {
    if (x < t.eta) u -= t.weight * pow(Rational(t.eta - x), order_ - 1);
  }
  return u;
}

Rational mixture_eu(const DiscreteDistribution& d, const UtilityMixture& u) {
  Rational eu = u.c0() + u.c1() * raw_moment(d, 1);
  for (const auto& t : u.terms()) eu -= t.weight * lower_partial_moment(d, t.eta, u.order() - 1);
  return eu;
}

Rational expected_utility(const DiscreteDistribution& d, const PolynomialUtility& u) {
  Rational eu(0);
  for (const auto& a : d.atoms()) eu += a.p * u.p(a.x);
  return eu;
}

bool is_utility_in_class(const PolynomialUtility& u, unsigned n, const Rational& a, const Rational& b) {
  const auto iv = RealInterval::closed(a, b);
  for (unsigned k = 1; k <= n; ++k) {
    Polynomial dk = poly_derivative(u.p, k);
    if (k % 2 == 0) dk = -dk;
    if (!is_nonnegative_on(dk, iv)) return false;
  }
  return true;
}

UtilityMixture random_mixture(Rng& rng, unsigned n, const Rational& eta_lo, const Rational& eta_hi,
                              unsigned max_terms) {
  const auto count = static_cast<unsigned>(rng.between(1, max_terms));
  std::vector<UtilityMixture::Term> terms;
  terms.reserve(count);
  for (unsigned i = 0; i < count; ++i) {
    Rational w = make_rational(rng.between(1, 16), rng.between(1, 16));
    terms.push_back({std::move(w), rng.rational_in(eta_lo, eta_hi, 64)});
  }
  Rational c0 = rng.rational_in(Rational(-1), Rational(1), 16);
  Rational c1 = rng.unit_rational(16);
  return UtilityMixture(n, std::move(terms), std::move(c0), std::move(c1));
}

PolynomialUtility random_polynomial_utility(Rng& rng, unsigned max_degree, const Rational& a, const Rational& b) {
  const Rational width = b - a;
  Polynomial p = Polynomial{rng.rational_in(Rational(-1), Rational(1), 16), rng.unit_rational(16)};
  const auto terms = static_cast<unsigned>(rng.between(1, 3));
  for (unsigned i = 0; i < terms; ++i) {
    const auto k = static_cast<unsigned>(rng.between(1, static_cast<std::int64_t>(max_degree)));
    const Rational beta = b + width * rng.unit_rational(8);
    const Rational w = make_rational(rng.between(1, 8), rng.between(1, 8));
    p -= Polynomial::shifted_power(beta, k) * w;
  }
  // Perturbation that may leave the class; callers filter.
  const auto k = static_cast<unsigned>(rng.between(0, static_cast<std::int64_t>(max_degree)));
  p += Polynomial::monomial(rng.rational_in(Rational(-1), Rational(1), 32), k);
  return {std::move(p)};
}

DualReport dual_consistency_check(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n,
                                  const Scope& scope, unsigned trials, std::uint64_t seed) {
  DualReport report;
  report.trials = trials;
  report.dominance_holds = check(x, y, n, 0, scope).holds;

  Rational lo, hi;
  if (scope.is_real()) {
    const Rational smin = std::min(x.support().min, y.support().min);
    const Rational smax = std::max(x.support().max, y.support().max);
    Rational w = smax - smin;
    if (w == 0) w = 1;
    lo = smin - w;
    hi = smax + 2 * w;
  } else {
    lo = scope.interval->first;
    hi = scope.interval->second;
  }

  // The FSD class has no singularity representation here; order 1 compares
  // the order-2 mixtures, which are a subset of the nondecreasing utilities.
  const unsigned order = std::max(n, 2U);
  for (unsigned t = 0; t < trials; ++t) {
    Rng rng(seed, t);
    UtilityMixture u = random_mixture(rng, order, lo, hi);
    Rational ex = mixture_eu(x, u);
    Rational ey = mixture_eu(y, u);
    if (ex < ey) {
      report.violation = DualViolation{std::move(u), std::move(ex), std::move(ey)};
      break;
    }
  }
  return report;
}

}  // namespace hsd
