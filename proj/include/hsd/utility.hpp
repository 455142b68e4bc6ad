#pragma once

#include "hsd/dominance.hpp"
#include "hsd/polynomial.hpp"
#include "hsd/random.hpp"

#include <optional>
#include <vector>

namespace hsd {

/// u(x) = -(eta - x)_+^{n-1}, n >= 2.
struct SingularityUtility {
  Rational eta;
  unsigned order = 2;
};

/// c0 + c1 x + sum_i w_i * SingularityUtility(eta_i, order), w_i > 0, c1 >= 0.
class UtilityMixture {
 public:
  struct Term {
    Rational weight;
    Rational eta;
  };

  /// Throws Error(InvalidArgument) on order < 2, a nonpositive weight or c1 < 0.
  UtilityMixture(unsigned order, std::vector<Term> terms, Rational c0 = Rational(0), Rational c1 = Rational(0));

  unsigned order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  const Rational& c0() const { return c0_; }
  const Rational& c1() const { return c1_; }

  Rational operator()(const Rational& x) const;

 private:
  unsigned order_;
  std::vector<Term> terms_;
  Rational c0_;
  Rational c1_;
};

struct PolynomialUtility {
  Polynomial p;
};

/// E[u(X)] = c0 + c1 E[X] - sum w_i E[(eta_i - X)_+^{n-1}].
Rational mixture_eu(const DiscreteDistribution& d, const UtilityMixture& u);
Rational expected_utility(const DiscreteDistribution& d, const PolynomialUtility& u);

/// (-1)^{k-1} u^{(k)} >= 0 on [a,b] for every k = 1..n.
bool is_utility_in_class(const PolynomialUtility& u, unsigned n, const Rational& a, const Rational& b);

/// Random mixture of order n with 1..max_terms singularity terms whose
/// thresholds are drawn from [eta_lo, eta_hi].
UtilityMixture random_mixture(Rng& rng, unsigned n, const Rational& eta_lo, const Rational& eta_hi,
                              unsigned max_terms = 4);

/// Random polynomial of degree <= max_degree built from the cone spanned by
/// x, 1 and -(beta - x)^k (beta >= b), plus one random monomial perturbation.
/// Membership in a class is not guaranteed; filter with is_utility_in_class.
PolynomialUtility random_polynomial_utility(Rng& rng, unsigned max_degree, const Rational& a, const Rational& b);

struct DualViolation {
  UtilityMixture utility;
  Rational eu_x;
  Rational eu_y;
};

struct DualReport {
  bool dominance_holds = false;
  unsigned trials = 0;
  /// First sampled utility with E[u(X)] < E[u(Y)]. When dominance holds this
  /// is a contradiction; when it fails it is a separating utility.
  std::optional<DualViolation> violation;

  bool consistent() const { return !(dominance_holds && violation); }
};

/// Samples `trials` order-n mixtures, deterministically in (seed, trial).
/// Interval scope draws thresholds in [a,b]; real scope draws them from
/// [min - w, max + 2w], w the joint support width (1 when degenerate).
DualReport dual_consistency_check(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n,
                                  const Scope& scope, unsigned trials, std::uint64_t seed);

}  // namespace hsd
