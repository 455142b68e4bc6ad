#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsd/error.hpp"
#include "hsd/random.hpp"
#include "hsd/rational.hpp"

using hsd::Rational;

TEST_CASE("parse and print round trip") {
  CHECK(hsd::to_string(hsd::parse_rational("341/72900")) == "341/72900");
  CHECK(hsd::to_string(hsd::parse_rational("2/4")) == "1/2");
  CHECK(hsd::to_string(hsd::parse_rational("-37/8100")) == "-37/8100");
  CHECK(hsd::to_string(hsd::parse_rational("\xE2\x88\x92" "13/2916")) == "-13/2916");
  CHECK(hsd::to_string(hsd::parse_rational("7")) == "7");
  CHECK(hsd::to_string(hsd::parse_rational("0/5")) == "0");
  CHECK(hsd::to_string(hsd::parse_rational("-0")) == "0");
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "+1", " 1", "1.5", "1/2/3", "0x10", "1e3", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(hsd::parse_rational(bad), hsd::Error);
  }
}

TEST_CASE("decimal rendering truncates toward zero") {
  CHECK(hsd::to_decimal(hsd::make_rational(341, 72900), 6) == "0.004677");
  CHECK(hsd::to_decimal(hsd::make_rational(-13, 2916), 4) == "-0.0044");
  CHECK(hsd::to_decimal(hsd::make_rational(7, 2), 0) == "3");
  CHECK(hsd::to_decimal(Rational(0), 2) == "0.00");
}

TEST_CASE("canonical form survives arithmetic") {
  hsd::Rng rng(1, 0);
  for (int i = 0; i < 500; ++i) {
    const Rational a = hsd::make_rational(rng.between(-50, 50), rng.between(1, 60));
    const Rational b = hsd::make_rational(rng.between(-50, 50), rng.between(1, 60));
    CHECK(hsd::is_canonical(a + b));
    CHECK(hsd::is_canonical(a * b));
    CHECK(hsd::is_canonical(a - b));
    if (b != 0) CHECK(hsd::is_canonical(a / b));
  }
}

TEST_CASE("pow and factorial") {
  CHECK(hsd::pow(hsd::make_rational(-2, 3), 3) == hsd::make_rational(-8, 27));
  CHECK(hsd::pow(Rational(5), 0) == 1);
  CHECK(hsd::factorial(0) == 1);
  CHECK(hsd::factorial(5) == 120);
}

TEST_CASE("rng is deterministic per (seed, stream)") {
  hsd::Rng a(42, 7), b(42, 7), c(42, 8);
  bool differs = false;
  for (int i = 0; i < 16; ++i) {
    const auto va = a.next();
    CHECK(va == b.next());
    differs = differs || va != c.next();
  }
  CHECK(differs);
  hsd::Rng r(3, 3);
  for (int i = 0; i < 1000; ++i) {
    const auto v = r.below(7);
    CHECK(v < 7);
    const Rational q = r.rational_in(Rational(-1), Rational(2), 9);
    CHECK(q >= -1);
    CHECK(q <= 2);
  }
}
