#include "hsd/polynomial.hpp"

#include "hsd/error.hpp"

#include <algorithm>
#include <sstream>

namespace hsd {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> cs(power + 1, Rational(0));
  cs[power] = c;
  return Polynomial(std::move(cs));
}

Polynomial Polynomial::shifted_power(const Rational& root, unsigned power) {
  // Binomial expansion: sum_j C(power, j) (-root)^(power-j) x^j.
  std::vector<Rational> cs(power + 1);
  const Rational neg = -root;
  Integer binom = 1;
  for (unsigned j = 0; j <= power; ++j) {
    cs[j] = Rational(binom) * hsd::pow(neg, power - j);
    binom = binom * (power - j) / (j + 1);
  }
  return Polynomial(std::move(cs));
}

Rational Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

bool Polynomial::is_canonical() const {
  if (!coeffs_.empty() && coeffs_.back() == 0) return false;
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return hsd::is_canonical(c); });
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << hsd::to_string(mag);
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }

Polynomial poly_derivative(const Polynomial& p, unsigned k) {
  const auto cs = p.coefficients();
  if (cs.size() <= k) return {};
  std::vector<Rational> out(cs.size() - k);
  for (std::size_t i = k; i < cs.size(); ++i) {
    // falling factorial i (i-1) ... (i-k+1)
    Integer f = 1;
    for (std::size_t j = 0; j < k; ++j) f *= static_cast<unsigned long>(i - j);
    out[i - k] = cs[i] * Rational(f);
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  const int dd = divisor.degree();
  std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  if (static_cast<int>(rem.size()) - 1 < dd) return {Polynomial{}, dividend};
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(dd), Rational(0));
  const Rational& lead = divisor.leading();
  const auto dcs = divisor.coefficients();
  for (std::size_t top = rem.size(); top-- > static_cast<std::size_t>(dd);) {
    if (rem[top] == 0) continue;
    const Rational factor = rem[top] / lead;
    const std::size_t shift = top - static_cast<std::size_t>(dd);
    quot[shift] = factor;
    for (std::size_t j = 0; j < dcs.size(); ++j) rem[shift + j] -= factor * dcs[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  const Polynomial g = poly_gcd(p, poly_derivative(p));
  return poly_divmod(p, g).first;
}

}  // namespace hsd
