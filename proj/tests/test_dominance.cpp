#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "hsd/dominance.hpp"
#include "hsd/error.hpp"
#include "hsd/harness.hpp"
#include "oracles.hpp"

using namespace hsd::fixtures;
using hsd::Rational;

namespace {

hsd::DiscreteDistribution coin(std::int64_t lo, std::int64_t hi) {
  return hsd::make_distribution({{q(lo), q(1, 2)}, {q(hi), q(1, 2)}});
}

std::vector<hsd::TrialPair> random_pairs(std::uint64_t seed, unsigned count, unsigned max_atoms = 4) {
  hsd::ExperimentConfig cfg;
  cfg.seed = seed;
  cfg.trials = count;
  cfg.max_atoms = max_atoms;
  cfg.injection_rate = 0;
  std::vector<hsd::TrialPair> out;
  for (unsigned i = 0; i < count; ++i) out.push_back(hsd::trial_pair(cfg, i));
  return out;
}

}  // namespace

TEST_CASE("check_nsd_real examples") {
  CHECK(hsd::check_nsd_real(example_x(), example_y(), 4).holds);

  const auto v = hsd::check_nsd_real(point(0), point(1), 1);
  REQUIRE_FALSE(v.holds);
  const auto& w = std::get<hsd::PointwiseViolation>(*v.witness);
  CHECK(w.eta == 0);
  CHECK(w.gap == -1);

  CHECK(hsd::check_nsd_real(point(1, 2), coin(0, 1), 2).holds);
  CHECK_FALSE(hsd::check_nsd_real(coin(0, 1), point(1, 2), 2).holds);
}

TEST_CASE("check_nsd_interval examples") {
  const auto narrow = hsd::check_nsd_interval(example_x(), example_y(), 4, q(0), q(1));
  REQUIRE_FALSE(narrow.holds);
  const auto& b = std::get<hsd::BoundaryViolation>(*narrow.witness);
  CHECK(b.k == 3);
  CHECK(b.lhs - b.rhs == q(341, 72900));

  CHECK(hsd::check_nsd_interval(example_x(), example_y(), 4, q(0), q(2)).holds);
  const auto rows = hsd::boundary_table(example_x(), example_y(), 4, q(2));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].lhs - rows[0].rhs == 0);
  CHECK(rows[1].lhs - rows[1].rhs == q(-37, 8100));
  CHECK(rows[2].lhs - rows[2].rhs == q(-13, 2916));

  for (unsigned n = 1; n <= 6; ++n) CHECK(hsd::check_nsd_interval(example_x(), example_x(), n, q(-1), q(3)).holds);

  CHECK_THROWS_AS(hsd::check_nsd_interval(example_x(), example_y(), 4, q(1, 2), q(1)), hsd::Error);
  CHECK_THROWS_AS(hsd::check_nsd_interval(example_x(), example_y(), 4, q(0), q(1, 2)), hsd::Error);
}

TEST_CASE("check_nmsd examples") {
  CHECK(hsd::check_nmsd_real(point(1, 2), coin(0, 1), 2, 1).holds);
  const auto v = hsd::check_nmsd_real(point(1, 2), coin(0, 2), 2, 1);
  REQUIRE_FALSE(v.holds);
  const auto& mm = std::get<hsd::MomentMismatch>(*v.witness);
  CHECK(mm.k == 1);
  CHECK(mm.lhs == q(1, 2));
  CHECK(mm.rhs == 1);
  CHECK_THROWS_AS(hsd::check_nmsd_real(point(0), point(0), 2, 2), hsd::Error);

  CHECK(hsd::check_nmsd_interval(point(1, 2), coin(0, 1), 2, 1, q(0), q(1)).holds);
  CHECK(hsd::check_nmsd_interval(example_y(), example_y(), 5, 3, q(0), q(1)).holds);
  const auto e = hsd::check_nmsd_interval(example_x(), example_y(), 4, 0, q(0), q(1));
  REQUIRE_FALSE(e.holds);
  CHECK(std::get<hsd::BoundaryViolation>(*e.witness).k == 3);
  CHECK_THROWS_AS(hsd::check_nmsd_interval(point(0), point(0), 2, 2, q(0), q(1)), hsd::Error);

  for (const auto& p : random_pairs(11, 100)) {
    for (unsigned n = 1; n <= 4; ++n) CHECK(hsd::check_nmsd_real(p.x, p.y, n, 0) == hsd::check_nsd_real(p.x, p.y, n));
  }
}

TEST_CASE("low orders agree with a root-free oracle") {
  for (const auto& p : random_pairs(12, 300, 5)) {
    for (unsigned n = 1; n <= 3; ++n) {
      CHECK(hsd::check_nsd_real(p.x, p.y, n).holds == hsd::oracle::nsd_real_low_order(p.x, p.y, n));
      CHECK(hsd::check_nsd_real(p.y, p.x, n).holds == hsd::oracle::nsd_real_low_order(p.y, p.x, n));
    }
  }
}

TEST_CASE("structural properties on random pairs") {
  unsigned holds_seen = 0;
  for (const auto& p : random_pairs(13, 500)) {
    bool prev = false;
    for (unsigned n = 1; n <= 6; ++n) {
      const auto real = hsd::check_nsd_real(p.x, p.y, n);
      const auto narrow = hsd::check_nsd_interval(p.x, p.y, n, q(0), q(1));
      const auto wide = hsd::check_nsd_interval(p.x, p.y, n, q(0), q(2));
      if (prev) CHECK(real.holds);
      prev = real.holds;
      if (narrow.holds) {
        CHECK(real.holds);
        CHECK(wide.holds);
      }
      if (n <= 3) CHECK(narrow.holds == real.holds);
      if (real.holds) {
        ++holds_seen;
        CHECK(hsd::raw_moment(p.x, 1) >= hsd::raw_moment(p.y, 1));
        if (hsd::check_nsd_real(p.y, p.x, n).holds) CHECK(p.x == p.y);
      }
      for (const auto& [v, scope] : {std::pair{real, hsd::Scope::real()}, std::pair{narrow, hsd::Scope::on(q(0), q(1))}}) {
        if (v.holds) continue;
        REQUIRE(v.witness);
        CHECK(hsd::witness_reproduces(p.x, p.y, n, scope, *v.witness));
        if (const auto* pw = std::get_if<hsd::PointwiseViolation>(&*v.witness)) {
          CHECK(pw->gap < 0);
          CHECK(hsd::oracle::lpm(p.y, pw->eta, n - 1) - hsd::oracle::lpm(p.x, pw->eta, n - 1) ==
                pw->gap * hsd::factorial(n - 1));
        }
        if (const auto* bw = std::get_if<hsd::BoundaryViolation>(&*v.witness)) CHECK(bw->lhs > bw->rhs);
      }
    }
  }
  CHECK(holds_seen > 0);
}

TEST_CASE("witness_reproduces rejects tampered witnesses") {
  const auto v = hsd::check_nsd_interval(example_x(), example_y(), 4, q(0), q(1));
  REQUIRE(v.witness);
  auto w = std::get<hsd::BoundaryViolation>(*v.witness);
  CHECK(hsd::witness_reproduces(example_x(), example_y(), 4, hsd::Scope::on(q(0), q(1)), w));
  w.lhs += q(1, 1000000);
  CHECK_FALSE(hsd::witness_reproduces(example_x(), example_y(), 4, hsd::Scope::on(q(0), q(1)), w));
  CHECK_FALSE(hsd::witness_reproduces(example_x(), example_y(), 4, hsd::Scope::on(q(0), q(1)),
                                       hsd::PointwiseViolation{q(1, 2), q(-1)}));
}
