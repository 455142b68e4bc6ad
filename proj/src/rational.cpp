#include "hsd/rational.hpp"

#include "hsd/error.hpp"

#include <algorithm>

namespace hsd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MassNotOne: return "MassNotOne";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::SupportOutsideInterval: return "SupportOutsideInterval";
    case ErrorCode::BadDegrees: return "BadDegrees";
    case ErrorCode::BadIntervals: return "BadIntervals";
    case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::MOutOfRange: return "MOutOfRange";
    case ErrorCode::RatioTooSmall: return "RatioTooSmall";
    case ErrorCode::MeansNotOrdered: return "MeansNotOrdered";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(std::to_string(num)), Integer(std::to_string(den)));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (text.starts_with("-")) {
    negative = true;
    text.remove_prefix(1);
  } else if (text.starts_with("\xE2\x88\x92")) {  // U+2212 MINUS SIGN
    negative = true;
    text.remove_prefix(3);
  }
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "not a rational: \"" + original + "\"");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator: \"" + original + "\"");
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  digits = std::max(digits, 0);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled = abs(q.get_num()) * scale;
  Integer whole;
  mpz_tdiv_q(whole.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  std::string body = whole.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sgn(q) < 0 ? "-" : "") + body;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

bool is_canonical(const Rational& q) {
  if (q.get_den() <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (q.get_num() == 0) return q.get_den() == 1;
  return g == 1;
}

}  // namespace hsd
