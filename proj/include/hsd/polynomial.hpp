#pragma once

#include "hsd/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hsd {

/// Univariate polynomial with exact rational coefficients, coefficient i
/// multiplying x^i. Trailing zeros are always stripped, so the zero
/// polynomial has no coefficients and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, unsigned power);
  /// (x - root)^power, expanded.
  static Polynomial shifted_power(const Rational& root, unsigned power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  bool is_canonical() const;
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Rational poly_eval(const Polynomial& p, const Rational& x);

/// k-th derivative, k >= 1.
Polynomial poly_derivative(const Polynomial& p, unsigned k = 1);

/// Euclidean division; throws Error(ZeroPolynomial) when divisor is zero.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Monic gcd (zero when both inputs are zero).
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'): same distinct roots as p, all simple.
Polynomial square_free_part(const Polynomial& p);

}  // namespace hsd
