#include "hsd/harness.hpp"

#include "hsd/error.hpp"
#include "hsd/random.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include <omp.h>

namespace hsd {

void ExperimentConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (max_atoms < 1) throw Error(ErrorCode::InvalidArgument, "max_atoms must be >= 1");
  if (denominator_bound < 2) throw Error(ErrorCode::InvalidArgument, "denominator_bound must be >= 2");
  if (!(a < b)) throw Error(ErrorCode::BadIntervals, "need a < b");
  if (!(b < extended())) throw Error(ErrorCode::BadIntervals, "extended right end must exceed b");
  if (orders.empty()) throw Error(ErrorCode::InvalidArgument, "no orders configured");
  for (unsigned n : orders) {
    if (n < 1) throw Error(ErrorCode::OrderTooSmall, "orders must be >= 1");
  }
  if (sgn(injection_rate) < 0 || injection_rate > 1) {
    throw Error(ErrorCode::InvalidArgument, "injection_rate outside [0, 1]");
  }
}

std::string_view to_string(Comparison c) { return c == Comparison::Real ? "real" : "extended"; }

const ConsistencyRow* ConsistencyReport::row(unsigned n, unsigned m, Comparison c) const {
  for (const auto& r : rows) {
    if (r.n == n && r.m == m && r.comparison == c) return &r;
  }
  return nullptr;
}

DiscreteDistribution random_distribution(const ExperimentConfig& cfg, std::uint64_t stream) {
  Rng rng(cfg.seed, stream);
  const unsigned bound = cfg.denominator_bound;
  const auto atoms = static_cast<unsigned>(rng.between(1, std::min(cfg.max_atoms, bound)));
  const auto total = static_cast<unsigned>(rng.between(atoms, bound));

  // Random composition of `total` into `atoms` positive parts.
  std::vector<unsigned> cuts(total - 1);
  std::iota(cuts.begin(), cuts.end(), 1U);
  for (unsigned i = 0; i + 1 < atoms; ++i) {
    const auto j = i + static_cast<unsigned>(rng.below(cuts.size() - i));
    std::swap(cuts[i], cuts[j]);
  }
  cuts.resize(atoms - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(total);

  std::vector<std::pair<Rational, Rational>> pairs;
  pairs.reserve(atoms);
  unsigned prev = 0;
  for (unsigned c : cuts) {
    pairs.emplace_back(rng.rational_in(cfg.a, cfg.b, bound), make_rational(c - prev, total));
    prev = c;
  }
  return DiscreteDistribution::from_pairs(pairs);
}

DiscreteDistribution equalize_mean(const DiscreteDistribution& y, const Rational& mean, const Rational& a,
                                   const Rational& b) {
  const Rational ey = raw_moment(y, 1);
  if (ey == mean) return y;
  const Rational anchor = ey < mean ? b : a;
  // weight * ey + (1 - weight) * anchor = mean
  const Rational weight = (anchor - mean) / (anchor - ey);
  return mixture(y, DiscreteDistribution::point_mass(anchor), weight);
}

namespace {

// Example-family perturbations that keep the [0,1] vs [0,2] discrepancy.
constexpr std::int64_t kInjectedEpsMilli[] = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12};

}  // namespace

TrialPair trial_pair(const ExperimentConfig& cfg, unsigned trial) {
  Rng rng(cfg.seed, 3ULL * trial);
  if (rng.chance(cfg.injection_rate)) {
    const auto pick = rng.below(std::size(kInjectedEpsMilli));
    const auto family = example_counter_pair(make_rational(kInjectedEpsMilli[pick], 1000));
    auto moved = rescale_pair(family, 0, 1, cfg.a, cfg.b);
    return {std::move(moved.x), std::move(moved.y), true};
  }
  auto x = random_distribution(cfg, 3ULL * trial + 1);
  auto y = random_distribution(cfg, 3ULL * trial + 2);
  if (cfg.equalize_means) y = equalize_mean(y, raw_moment(x, 1), cfg.a, cfg.b);
  return {std::move(x), std::move(y), false};
}

namespace {

struct RowKey {
  unsigned n;
  unsigned m;
};

std::vector<RowKey> row_keys(const ExperimentConfig& cfg) {
  std::vector<RowKey> keys;
  for (unsigned n : cfg.orders) {
    for (unsigned m : cfg.degrees) {
      if (m <= n - 1) keys.push_back({n, m});
    }
  }
  return keys;
}

struct Cell {
  bool narrow = false;
  bool real = false;
  bool extended = false;
};

struct TrialOutcome {
  TrialPair pair;
  std::vector<Cell> cells;
  bool mean_ordered = true;
};

TrialOutcome run_trial(const ExperimentConfig& cfg, const std::vector<RowKey>& keys, unsigned trial) {
  TrialOutcome out{trial_pair(cfg, trial), {}, true};
  const auto& [x, y, injected] = out.pair;
  out.mean_ordered = raw_moment(x, 1) >= raw_moment(y, 1);
  const Rational d = cfg.extended();
  out.cells.reserve(keys.size());
  for (const auto& k : keys) {
    out.cells.push_back({check_nmsd_interval(x, y, k.n, k.m, cfg.a, cfg.b).holds,
                         check_nmsd_real(x, y, k.n, k.m).holds,
                         check_nmsd_interval(x, y, k.n, k.m, cfg.a, d).holds});
  }
  return out;
}

void tally(ConsistencyRow& row, bool narrow, bool wide, bool mean_ordered) {
  if (narrow && wide) ++row.both_hold;
  else if (!narrow && !wide) ++row.both_fail;
  else if (narrow) ++row.narrow_only;
  else ++row.wide_only;
  if (wide && !mean_ordered) ++row.mean_violations;
}

ConsistencyReport fold(const ExperimentConfig& cfg, const std::vector<RowKey>& keys,
                       std::vector<TrialOutcome>& outcomes) {
  ConsistencyReport report{cfg, 0, {}, {}};
  for (const auto& k : keys) {
    report.rows.push_back({k.n, k.m, Comparison::Real});
    report.rows.push_back({k.n, k.m, Comparison::Extended});
  }
  for (unsigned t = 0; t < outcomes.size(); ++t) {
    auto& o = outcomes[t];
    if (o.pair.injected) ++report.injected_trials;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const Cell& c = o.cells[i];
      const std::pair<Comparison, bool> wides[] = {{Comparison::Real, c.real}, {Comparison::Extended, c.extended}};
      for (std::size_t w = 0; w < 2; ++w) {
        const auto [cmp, wide] = wides[w];
        tally(report.rows[2 * i + w], c.narrow, wide, o.mean_ordered);
        if (c.narrow != wide && report.discrepancies.size() < cfg.max_witnesses) {
          report.discrepancies.push_back(
              {t, keys[i].n, keys[i].m, cmp, o.pair.injected, c.narrow, wide, o.pair.x, o.pair.y});
        }
      }
    }
  }
  return report;
}

}  // namespace

ConsistencyReport consistency_experiment_serial(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto keys = row_keys(cfg);
  std::vector<TrialOutcome> outcomes;
  outcomes.reserve(cfg.trials);
  for (unsigned t = 0; t < cfg.trials; ++t) outcomes.push_back(run_trial(cfg, keys, t));
  return fold(cfg, keys, outcomes);
}

ConsistencyReport consistency_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto keys = row_keys(cfg);
  std::vector<std::optional<TrialOutcome>> slots(cfg.trials);
  std::exception_ptr failure;
  const auto trials = static_cast<long>(cfg.trials);
#pragma omp parallel for schedule(dynamic, 8)
  for (long t = 0; t < trials; ++t) {
    try {
      slots[static_cast<std::size_t>(t)] = run_trial(cfg, keys, static_cast<unsigned>(t));
    } catch (...) {
#pragma omp critical(hsd_harness_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<TrialOutcome> outcomes;
  outcomes.reserve(slots.size());
  for (auto& s : slots) outcomes.push_back(std::move(*s));
  return fold(cfg, keys, outcomes);
}

SearchResult search_inconsistency(unsigned n, unsigned m, const Rational& a, const Rational& b, const Scope& wide,
                                  ExperimentConfig cfg) {
  if (m > n - 1) throw Error(ErrorCode::BadDegrees, "need m <= n - 1");
  if (!(a < b)) throw Error(ErrorCode::BadIntervals, "need a < b");
  if (!wide.is_real()) {
    const auto& [wa, wb] = *wide.interval;
    if (!(wb > b) || wa > a) throw Error(ErrorCode::BadIntervals, "wide interval must extend [a,b] to the right");
  }
  cfg.a = a;
  cfg.b = b;
  cfg.extended_right.reset();
  cfg.injection_rate = 0;
  cfg.equalize_means = cfg.equalize_means || m >= 1;

  SearchResult result;
  auto hit = [&](const DiscreteDistribution& x, const DiscreteDistribution& y) {
    ++result.examined;
    return !check_nmsd_interval(x, y, n, m, a, b).holds && check(x, y, n, m, wide).holds;
  };

  std::vector<ConstructedPair> families;
  families.push_back(rescale_pair(example_counter_pair(make_rational(1, 100)), 0, 1, a, b));
  for (std::int64_t milli : kInjectedEpsMilli) {
    if (milli != 10) families.push_back(rescale_pair(example_counter_pair(make_rational(milli, 1000)), 0, 1, a, b));
  }
  Rational lm = make_rational(1, 10);
  for (int j = 0; j < 4; ++j, lm /= 10) families.push_back(rescale_pair(lemma_sequence_pair(lm), 0, 9, a, b));

  for (auto& f : families) {
    if (hit(f.x, f.y)) {
      result.pair = std::move(f);
      return result;
    }
  }
  for (unsigned t = 0; t < cfg.trials; ++t) {
    auto x = random_distribution(cfg, 3ULL * t + 1);
    auto y = random_distribution(cfg, 3ULL * t + 2);
    if (cfg.equalize_means) y = equalize_mean(y, raw_moment(x, 1), a, b);
    if (hit(x, y)) {
      result.pair = ConstructedPair{std::move(x), std::move(y), {{"trial", Rational(t)}}, "random_search"};
      return result;
    }
  }
  return result;
}

}  // namespace hsd
