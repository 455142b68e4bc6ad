#include "hsd/real_roots.hpp"

#include "hsd/error.hpp"

#include <algorithm>

namespace hsd {

RealInterval RealInterval::closed(const Rational& a, const Rational& b) {
  if (a > b) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
  return {a, b};
}

bool RealInterval::contains(const Rational& x) const {
  return (!lo || *lo <= x) && (!hi || x <= *hi);
}

std::string RealInterval::to_string() const {
  return "[" + (lo ? hsd::to_string(*lo) : std::string("-inf")) + ", " +
         (hi ? hsd::to_string(*hi) : std::string("+inf")) + "]";
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of the zero polynomial");
  Rational best(0);
  const auto cs = p.coefficients();
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) best = std::max(best, Rational(abs(cs[i] / p.leading())));
  return best + 1;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of the zero polynomial");
  std::vector<Polynomial> chain{p};
  Polynomial next = poly_derivative(p);
  while (!next.is_zero()) {
    chain.push_back(next);
    Polynomial rem = poly_divmod(chain[chain.size() - 2], chain.back()).second;
    next = -rem;
  }
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

namespace {

struct Clipped {
  Rational lo;
  Rational hi;
};

Clipped clip(const Polynomial& p, const RealInterval& iv) {
  if (iv.lo && iv.hi && *iv.lo > *iv.hi) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
  if (iv.is_finite()) return {*iv.lo, *iv.hi};
  const Rational bound = p.degree() >= 1 ? cauchy_bound(p) : Rational(1);
  Rational lo = iv.lo ? *iv.lo : -bound;
  Rational hi = iv.hi ? *iv.hi : bound;
  // A finite end may sit beyond the bound on the other side.
  if (!iv.lo && lo > hi) lo = hi - 1;
  if (!iv.hi && hi < lo) hi = lo + 1;
  return {lo, hi};
}

class RootCounter {
 public:
  explicit RootCounter(const Polynomial& square_free) : chain_(sturm_sequence(square_free)) {}

  int count(const Rational& l, const Rational& r) const {
    return sign_variations(chain_, l) - sign_variations(chain_, r);
  }

  void isolate(const Rational& l, const Rational& r, int n, std::vector<IsolatingInterval>& out) const {
    if (n == 0) return;
    if (n == 1) {
      out.push_back({l, r});
      return;
    }
    const Rational mid = (l + r) / 2;
    const int left = count(l, mid);
    isolate(l, mid, left, out);
    isolate(mid, r, n - left, out);
  }

  /// Some point of the open gap (from, bound) below the next root of the
  /// chain, where `from` may itself be a root and the next root is > from.
  Rational point_after(const Rational& from, Rational bound) const {
    for (;;) {
      const Rational mid = (from + bound) / 2;
      if (count(from, mid) == 0) return mid;
      bound = mid;
    }
  }

 private:
  std::vector<Polynomial> chain_;
};

}  // namespace

int count_real_roots(const Polynomial& p, const RealInterval& iv) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  const auto [lo, hi] = clip(p, iv);
  if (lo == hi) return 0;
  return RootCounter(square_free_part(p)).count(lo, hi);
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const RealInterval& iv) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root isolation of the zero polynomial");
  std::vector<IsolatingInterval> out;
  if (p.degree() == 0) return out;
  const auto [lo, hi] = clip(p, iv);
  if (lo == hi) return out;
  const RootCounter counter(square_free_part(p));
  counter.isolate(lo, hi, counter.count(lo, hi), out);
  return out;
}

NonnegativityResult is_nonnegative_on(const Polynomial& p, const RealInterval& iv) {
  if (p.is_zero()) return {};
  const auto [lo, hi] = clip(p, iv);
  auto check = [&](const Rational& x) -> std::optional<NonnegativityResult> {
    if (sgn(p(x)) < 0) return NonnegativityResult{false, x};
    return std::nullopt;
  };
  if (p.degree() == 0 || lo == hi) return check(lo).value_or(NonnegativityResult{});

  // p keeps one sign between consecutive distinct roots, so one sample per
  // root-free gap plus the two ends decides the question.
  const Polynomial q = square_free_part(p);
  const RootCounter counter(q);
  std::vector<IsolatingInterval> roots;
  counter.isolate(lo, hi, counter.count(lo, hi), roots);

  std::vector<Rational> samples{lo};
  if (q(lo) == 0) samples.push_back(counter.point_after(lo, roots.empty() ? hi : roots.front().right));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Rational& r = roots[i].right;
    if (r == hi) break;
    if (q(r) != 0) {
      samples.push_back(r);
    } else {
      samples.push_back(counter.point_after(r, i + 1 < roots.size() ? roots[i + 1].right : hi));
    }
  }
  samples.push_back(hi);

  for (const auto& x : samples) {
    if (auto bad = check(x)) return *bad;
  }
  return {};
}

}  // namespace hsd
