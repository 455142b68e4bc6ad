// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "hsd/constructions.hpp"
#include "hsd/dominance.hpp"
#include "hsd/harness.hpp"
#include "hsd/io.hpp"
#include "hsd/iterated_cdf.hpp"
#include "hsd/real_roots.hpp"
#include "hsd/utility.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using hsd::Comparison;
using hsd::Polynomial;
using hsd::Rational;
using Clock = std::chrono::steady_clock;

Rational q(std::int64_t n, std::int64_t d = 1) { return hsd::make_rational(n, d); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Shared by criteria 3, 4, 9 and 10.
hsd::ExperimentConfig unit_interval_config() {
  hsd::ExperimentConfig cfg;
  cfg.seed = 20240601;
  cfg.trials = 1000;
  cfg.max_atoms = 4;
  cfg.denominator_bound = 12;
  cfg.a = 0;
  cfg.b = 1;
  cfg.extended_right = q(2);
  cfg.orders = {1, 2, 3, 4, 5, 6};
  cfg.degrees = {0};
  cfg.injection_rate = q(1, 100);
  return cfg;
}

hsd::ExperimentConfig equal_mean_config() {
  hsd::ExperimentConfig cfg = unit_interval_config();
  cfg.seed = 777;
  cfg.trials = 500;
  cfg.degrees = {0, 1, 2, 3, 4, 5};
  cfg.equalize_means = true;
  cfg.injection_rate = 0;
  return cfg;
}

Rational gap(const hsd::DiscreteDistribution& x, const hsd::DiscreteDistribution& y, const Rational& b, unsigned k) {
  return hsd::shifted_moment(x, b, k - 1) - hsd::shifted_moment(y, b, k - 1);
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto p = hsd::example_counter_pair(q(1, 100));
  o.require(hsd::check_nsd_real(p.x, p.y, 4).holds, "4SD on R should hold");
  const auto narrow = hsd::check_nsd_interval(p.x, p.y, 4, q(0), q(1));
  const auto* bv = narrow.witness ? std::get_if<hsd::BoundaryViolation>(&*narrow.witness) : nullptr;
  o.require(!narrow.holds && bv && bv->k == 3 && bv->lhs - bv->rhs == q(341, 72900),
            "[0,1] should fail at k = 3 with gap 341/72900");
  o.require(hsd::check_nsd_interval(p.x, p.y, 4, q(0), q(2)).holds, "[0,2] should hold");
  o.require(gap(p.x, p.y, q(2), 2) == q(-37, 8100) && gap(p.x, p.y, q(2), 3) == q(-13, 2916),
            "[0,2] boundary gaps should be -37/8100 and -13/2916");
  const double s = seconds_since(t0);
  o.require(s < 1.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "k=3 gap 341/72900 on [0,1]; gaps -37/8100, -13/2916 on [0,2]; " + std::to_string(s) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  Rational prev = 0;
  for (const Rational m : {q(1, 10), q(1, 100), q(1, 1000)}) {
    const auto p = hsd::lemma_sequence_pair(m);
    const Rational eps = m / (54 * (1 + m));
    const Rational dm = hsd::raw_moment(p.x, 1) - hsd::raw_moment(p.y, 1);
    o.require(dm == 5 * eps * m, "mean gap at m = " + hsd::to_string(m));
    const Rational direct = (hsd::raw_moment(p.x, 2) - hsd::raw_moment(p.y, 2)) / dm;
    const Rational r = hsd::lemma_ratio(m);
    o.require(r == direct, "ratio formula at m = " + hsd::to_string(m));
    o.require(r > prev, "ratio not increasing at m = " + hsd::to_string(m));
    prev = r;
    o.require(hsd::check_nsd_real(p.x, p.y, 4).holds, "4SD on R at m = " + hsd::to_string(m));
  }
  const double s = seconds_since(t0);
  o.require(s < 1.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "ratio at m=1/1000 is " + hsd::to_decimal(prev, 3) + "; " + std::to_string(s) + " s";
  return o;
}

Outcome criterion3(const hsd::ConsistencyReport& r, double seconds) {
  Outcome o;
  for (const auto& row : r.rows) {
    if (row.comparison != Comparison::Real) continue;
    const std::string tag = "n=" + std::to_string(row.n);
    o.require(row.total() == r.config.trials, tag + " row incomplete");
    if (row.n <= 3) o.require(row.narrow_only == 0 && row.wide_only == 0, tag + " interval and R verdicts differ");
    o.require(row.narrow_only == 0, tag + " interval holds but R fails");
  }
  // The low-order R verdicts themselves against a root-free oracle.
  for (unsigned i = 0; i < r.config.trials && o.pass; ++i) {
    const auto p = hsd::trial_pair(r.config, i);
    for (unsigned n = 1; n <= 3; ++n) {
      o.require(hsd::check_nsd_real(p.x, p.y, n).holds == hsd::oracle::nsd_real_low_order(p.x, p.y, n),
                "oracle disagrees at trial " + std::to_string(i) + ", n=" + std::to_string(n));
    }
  }
  o.require(seconds < 60.0, "took " + std::to_string(seconds) + " s");
  if (o.pass) {
    unsigned wide_only = 0;
    for (const auto& row : r.rows) {
      if (row.comparison == Comparison::Real) wide_only += row.wide_only;
    }
    o.detail = std::to_string(r.config.trials) + " pairs, n=1..6; " + std::to_string(wide_only) +
               " R-only holds at n>=4; " + std::to_string(seconds) + " s";
  }
  return o;
}

Outcome criterion4(const hsd::ConsistencyReport& r) {
  Outcome o;
  for (const auto& row : r.rows) {
    if (row.comparison != Comparison::Extended) continue;
    o.require(row.narrow_only == 0, "n=" + std::to_string(row.n) + ": holds on [0,1] but fails on [0,2]");
  }
  unsigned injected_hits = 0;
  for (const auto& d : r.discrepancies) {
    if (d.comparison == Comparison::Extended && d.n == 4 && d.wide_holds && !d.narrow_holds) ++injected_hits;
  }
  o.require(r.injected_trials > 0, "no injected trials");
  o.require(injected_hits > 0, "no n = 4 trial holds on [0,2] while failing on [0,1]");
  if (o.pass) {
    o.detail = std::to_string(r.injected_trials) + " injected; " +
               std::to_string(r.row(4, 0, Comparison::Extended)->wide_only) + " n=4 pairs hold only on [0,2]";
  }
  return o;
}

Outcome criterion5(const hsd::ConsistencyReport& r) {
  Outcome o;
  unsigned checked = 0;
  for (const auto& row : r.rows) {
    if (row.comparison != Comparison::Real) continue;
    const unsigned gap_nm = row.n - row.m;
    if (gap_nm < 1 || gap_nm > 3) continue;
    checked += row.total();
    o.require(row.narrow_only == 0 && row.wide_only == 0,
              "(" + std::to_string(row.n) + "," + std::to_string(row.m) + ") verdicts differ");
  }
  for (unsigned i = 0; i < r.config.trials; ++i) {
    const auto p = hsd::trial_pair(r.config, i);
    o.require(hsd::raw_moment(p.x, 1) == hsd::raw_moment(p.y, 1), "unequal means at trial " + std::to_string(i));
  }
  const auto ex = hsd::example_counter_pair(q(1, 100));
  o.require(hsd::check_nmsd_real(ex.x, ex.y, 4, 0).holds && !hsd::check_nmsd_interval(ex.x, ex.y, 4, 0, q(0), q(1)).holds,
            "Example should separate (4,0)");
  if (o.pass) o.detail = std::to_string(checked) + " (pair, n, m) verdict pairs agree; Example separates (4,0)";
  return o;
}

// Criterion 6 and its rerun for criterion 10.
struct DualSummary {
  Outcome outcome;
  std::string fingerprint;
};

DualSummary criterion6() {
  DualSummary out;
  Outcome& o = out.outcome;
  std::ostringstream fp;
  hsd::ExperimentConfig cfg = unit_interval_config();
  cfg.seed = 4242;
  cfg.injection_rate = 0;
  unsigned pairs = 0, mixtures = 0, poly_pairs = 0, utilities = 0;
  for (unsigned i = 0; pairs < 200 && i < 20000; ++i) {
    auto p = hsd::trial_pair(cfg, i);
    const unsigned n = 2 + i % 3;
    if (!hsd::check_nsd_real(p.x, p.y, n).holds) {
      if (!hsd::check_nsd_real(p.y, p.x, n).holds) continue;
      std::swap(p.x, p.y);
    }
    ++pairs;
    const auto rep = hsd::dual_consistency_check(p.x, p.y, n, hsd::Scope::real(), 50, cfg.seed + i);
    mixtures += rep.trials;
    o.require(rep.dominance_holds && !rep.violation, "mixture violation at draw " + std::to_string(i));
    fp << i << ':' << n << ':' << rep.consistent() << ';';

    if (!hsd::check_nsd_interval(p.x, p.y, n, q(0), q(1)).holds) continue;
    ++poly_pairs;
    hsd::Rng rng(cfg.seed, 1000000 + i);
    unsigned members = 0;
    for (unsigned attempt = 0; members < 50 && attempt < 2000; ++attempt) {
      const auto u = hsd::random_polynomial_utility(rng, 6, q(0), q(1));
      if (!hsd::is_utility_in_class(u, n, q(0), q(1))) continue;
      ++members;
      const Rational ex = hsd::expected_utility(p.x, u), ey = hsd::expected_utility(p.y, u);
      o.require(ex >= ey, "polynomial utility violation at draw " + std::to_string(i));
      fp << hsd::to_string(ex - ey) << ',';
    }
    utilities += members;
    o.require(members == 50, "only " + std::to_string(members) + " class members at draw " + std::to_string(i));
  }
  o.require(pairs == 200, "only " + std::to_string(pairs) + " dominating pairs found");
  o.require(poly_pairs > 0, "no pair dominates on [0,1]");
  if (o.pass) {
    o.detail = std::to_string(pairs) + " pairs x 50 mixtures (" + std::to_string(mixtures) + " EUs); " +
               std::to_string(poly_pairs) + " pairs x 50 polynomial utilities (" + std::to_string(utilities) +
               " EUs); zero violations";
  }
  out.fingerprint = fp.str();
  return out;
}

Polynomial random_kernel_poly(hsd::Rng& rng) {
  auto coeff = [&] { return q(rng.between(-16, 16), rng.between(1, 4)); };
  auto root = [&] { return q(rng.between(-32, 32), 8); };
  const auto kind = rng.below(4);
  if (kind == 0) {
    const auto deg = rng.below(7);
    std::vector<Rational> c;
    for (std::uint64_t i = 0; i <= deg; ++i) c.push_back(coeff());
    return Polynomial(c);
  }
  if (kind == 1) {
    // Sum of two squares of cubics.
    Polynomial a({coeff(), coeff(), coeff(), coeff()}), b({coeff(), coeff()});
    Polynomial s = a * a;
    s += b * b;
    return s;
  }
  // Product of squared linear factors (roots planted in [-4,4]), optionally
  // perturbed by a small constant either way.
  Polynomial p = Polynomial::constant(q(rng.between(1, 5), rng.between(1, 3)));
  const auto factors = 1 + rng.below(3);
  for (std::uint64_t i = 0; i < factors; ++i) {
    const Polynomial lin({-root(), q(1)});
    p = p * lin * lin;
  }
  if (kind == 3) {
    Rational tiny = q(1, 1 << rng.between(4, 20));
    if (rng.chance(q(1, 2))) tiny = -tiny;
    p += Polynomial::constant(tiny);
  }
  return p;
}

Outcome criterion7() {
  Outcome o;
  hsd::Rng rng(31337, 7);
  const auto iv = hsd::RealInterval::closed(q(-4), q(4));
  unsigned yes = 0, no = 0;
  for (int i = 0; i < 1000; ++i) {
    const Polynomial p = random_kernel_poly(rng);
    const auto res = hsd::is_nonnegative_on(p, iv);
    if (res.nonnegative) {
      ++yes;
      o.require(!hsd::oracle::grid_refutation(p, -4096, 4096, 10), "grid refutes a nonnegative verdict: " + p.to_string("x"));
    } else {
      ++no;
      o.require(res.witness && iv.contains(*res.witness) && sgn(p(*res.witness)) < 0,
                "bad witness for " + p.to_string("x"));
    }
  }
  if (o.pass) o.detail = std::to_string(yes) + " nonnegative, " + std::to_string(no) + " refuted with witnesses";
  return o;
}

Outcome criterion8() {
  Outcome o;
  hsd::ExperimentConfig cfg;
  cfg.seed = 88;
  cfg.max_atoms = 7;
  cfg.a = q(-3);
  cfg.b = q(3);
  hsd::Rng rng(88, 8);
  for (unsigned i = 0; i < 200; ++i) {
    const auto d = hsd::random_distribution(cfg, i);
    const auto n = static_cast<unsigned>(rng.between(2, 6));
    const Rational eta = rng.chance(q(1, 4)) ? d.atoms()[rng.below(d.size())].x : rng.rational_in(q(-4), q(4), 24);
    const Rational seg = hsd::iterated_cdf(d, n)(eta);
    const Rational closed = hsd::iterated_cdf_at(d, n, eta);
    o.require(seg == closed && closed == hsd::oracle::lpm(d, eta, n - 1) / hsd::factorial(n - 1),
              "paths differ at triple " + std::to_string(i));
  }
  if (o.pass) o.detail = "200 triples, n in 2..6, exact agreement with the partial-moment oracle";
  return o;
}

Outcome criterion9(const hsd::ConsistencyReport& r) {
  Outcome o;
  unsigned holding = 0;
  for (unsigned i = 0; i < r.config.trials; ++i) {
    const auto p = hsd::trial_pair(r.config, i);
    bool any = false;
    for (unsigned n = 1; n <= 6 && !any; ++n) any = hsd::check_nsd_real(p.x, p.y, n).holds;
    if (!any) continue;
    ++holding;
    o.require(hsd::raw_moment(p.x, 1) >= hsd::raw_moment(p.y, 1), "E[X] < E[Y] at trial " + std::to_string(i));
  }
  for (const auto& row : r.rows) {
    if (row.comparison == Comparison::Real) o.require(row.mean_violations == 0, "report counts a mean violation");
  }
  if (o.pass) o.detail = std::to_string(holding) + " pairs dominate on R for some n; all have E[X] >= E[Y]";
  return o;
}

void print(int id, const std::string& name, const Outcome& o, unsigned& failures) {
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << name << ": " << o.detail << std::endl;
}

}  // namespace

int main() {
  unsigned failures = 0;
  auto guarded = [&](int id, const std::string& name, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    print(id, name, o, failures);
  };

  guarded(1, "Example triptych", criterion1);
  guarded(2, "Lemma family", criterion2);

  const auto cfg = unit_interval_config();
  auto t0 = Clock::now();
  const auto unit = hsd::consistency_experiment(cfg);
  const double unit_seconds = seconds_since(t0);
  guarded(3, "interval vs R on [0,1]", [&] { return criterion3(unit, unit_seconds); });
  guarded(4, "interval monotonicity [0,1] -> [0,2]", [&] { return criterion4(unit); });

  const auto eq = hsd::consistency_experiment(equal_mean_config());
  guarded(5, "(n,m)-SD with n-m <= 3", [&] { return criterion5(eq); });

  DualSummary dual;
  guarded(6, "dual soundness", [&] {
    dual = criterion6();
    return dual.outcome;
  });
  guarded(7, "nonnegativity kernel vs dense grid", criterion7);
  guarded(8, "two-path iterated CDF", criterion8);
  guarded(9, "mean corollary", [&] { return criterion9(unit); });

  guarded(10, "determinism", [&] {
    Outcome o;
    o.require(hsd::io::to_json(hsd::consistency_experiment(cfg)).dump() == hsd::io::to_json(unit).dump(),
              "[0,1] experiment report changed on rerun");
    o.require(hsd::io::to_json(hsd::consistency_experiment_serial(cfg)).dump() == hsd::io::to_json(unit).dump(),
              "serial report differs from parallel");
    o.require(hsd::io::to_json(hsd::consistency_experiment(equal_mean_config())).dump() == hsd::io::to_json(eq).dump(),
              "equal-mean report changed on rerun");
    o.require(criterion6().fingerprint == dual.fingerprint, "dual run changed on rerun");
    if (o.pass) o.detail = "reports byte-identical across reruns and across serial/parallel";
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
