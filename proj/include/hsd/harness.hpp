#pragma once

#include "hsd/constructions.hpp"
#include "hsd/dominance.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hsd {

struct ExperimentConfig {
  std::uint64_t seed = 0;
  unsigned trials = 100;
  unsigned max_atoms = 4;
  unsigned denominator_bound = 16;
  /// Reference interval [a,b]; random supports are drawn inside it.
  Rational a = 0;
  Rational b = 1;
  /// Right end d > b of the extended interval [a,d]; defaults to b + (b - a).
  std::optional<Rational> extended_right;
  std::vector<unsigned> orders{1, 2, 3, 4};
  /// Degrees m for (n,m)-SD; rows with m > n - 1 are skipped.
  std::vector<unsigned> degrees{0};
  /// Rebalance Y to the mean of X (mixing with a point mass at an endpoint).
  bool equalize_means = false;
  /// Fraction of trials replaced by rescaled Example-family pairs.
  Rational injection_rate = make_rational(1, 100);
  /// Cap on stored discrepancy witnesses (counts are never capped).
  unsigned max_witnesses = 64;

  Rational extended() const { return extended_right ? *extended_right : b + (b - a); }
  /// Throws Error(InvalidArgument) when an invariant is broken.
  void validate() const;
};

enum class Comparison { Real, Extended };
std::string_view to_string(Comparison c);

/// Agreement counts between the [a,b] verdict ("narrow") and the wider one
/// (the real line, or [a,d]).
struct ConsistencyRow {
  unsigned n = 0;
  unsigned m = 0;
  Comparison comparison = Comparison::Real;
  unsigned both_hold = 0;
  unsigned both_fail = 0;
  unsigned narrow_only = 0;
  unsigned wide_only = 0;
  /// Pairs where the wide relation holds yet E[X] < E[Y]; always 0 for m = 0
  /// on the real line.
  unsigned mean_violations = 0;

  unsigned total() const { return both_hold + both_fail + narrow_only + wide_only; }
  friend bool operator==(const ConsistencyRow&, const ConsistencyRow&) = default;
};

struct Discrepancy {
  unsigned trial = 0;
  unsigned n = 0;
  unsigned m = 0;
  Comparison comparison = Comparison::Real;
  bool injected = false;
  bool narrow_holds = false;
  bool wide_holds = false;
  DiscreteDistribution x;
  DiscreteDistribution y;
};

struct ConsistencyReport {
  ExperimentConfig config;
  unsigned injected_trials = 0;
  std::vector<ConsistencyRow> rows;
  std::vector<Discrepancy> discrepancies;

  const ConsistencyRow* row(unsigned n, unsigned m, Comparison c) const;
};

/// 1..max_atoms atoms in [a,b]; positions k/q with q <= denominator_bound,
/// probabilities with a common denominator <= denominator_bound.
/// Deterministic in (seed, stream).
DiscreteDistribution random_distribution(const ExperimentConfig& cfg, std::uint64_t stream);

/// Mixes y with a point mass at a or b so that the result has the given mean.
DiscreteDistribution equalize_mean(const DiscreteDistribution& y, const Rational& mean, const Rational& a,
                                   const Rational& b);

struct TrialPair {
  DiscreteDistribution x;
  DiscreteDistribution y;
  bool injected = false;
};

/// The pair evaluated at trial index i.
TrialPair trial_pair(const ExperimentConfig& cfg, unsigned trial);

/// Trials run in parallel (OpenMP); the report is folded in trial order and
/// matches consistency_experiment_serial exactly.
ConsistencyReport consistency_experiment(const ExperimentConfig& cfg);
ConsistencyReport consistency_experiment_serial(const ExperimentConfig& cfg);

struct SearchResult {
  std::optional<ConstructedPair> pair;
  unsigned examined = 0;

  /// No hit within budget. Says nothing about existence.
  bool inconclusive() const { return !pair.has_value(); }
};

/// Looks for a pair in [a,b] that fails (n,m)-SD on [a,b] yet satisfies it on
/// `wide` (the real line or [a,d] with d > b). Tries the Example and Lemma
/// families (rescaled into [a,b]) first, then cfg.trials random pairs drawn
/// from cfg with a, b overridden.
SearchResult search_inconsistency(unsigned n, unsigned m, const Rational& a, const Rational& b, const Scope& wide,
                                  ExperimentConfig cfg);

}  // namespace hsd
