#include "hsd/iterated_cdf.hpp"

#include "hsd/error.hpp"

#include <algorithm>

namespace hsd {

int PiecewisePolynomial::piece_index(const Rational& eta) const {
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), eta);
  return static_cast<int>(it - breakpoints.begin()) - 1;
}

Rational PiecewisePolynomial::operator()(const Rational& eta) const {
  const int i = piece_index(eta);
  return i < 0 ? Rational(0) : pieces[static_cast<std::size_t>(i)](eta);
}

bool PiecewisePolynomial::is_identically_zero() const {
  return std::all_of(pieces.begin(), pieces.end(), [](const Polynomial& p) { return p.is_zero(); });
}

namespace {

// Running sum of p (eta - x)^{n-1} / (n-1)! over atoms up to each breakpoint,
// sampled at every breakpoint in `grid` (which must contain the atoms).
std::vector<Polynomial> cumulative_pieces(const DiscreteDistribution& d, unsigned n, std::span<const Rational> grid) {
  const Rational scale = Rational(1) / factorial(n - 1);
  std::vector<Polynomial> pieces;
  pieces.reserve(grid.size());
  Polynomial acc;
  auto atom = d.atoms().begin();
  for (const auto& t : grid) {
    for (; atom != d.atoms().end() && atom->x <= t; ++atom) {
      acc += Polynomial::shifted_power(atom->x, n - 1) * (atom->p * scale);
    }
    pieces.push_back(acc);
  }
  return pieces;
}

}  // namespace

IteratedCdf iterated_cdf(const DiscreteDistribution& d, unsigned n) {
  if (n < 2) throw Error(ErrorCode::OrderTooSmall, "piecewise representation needs order >= 2");
  std::vector<Rational> grid;
  grid.reserve(d.size());
  for (const auto& a : d.atoms()) grid.push_back(a.x);
  auto pieces = cumulative_pieces(d, n, grid);
  return {n, {std::move(grid), std::move(pieces)}};
}

Rational iterated_cdf_at(const DiscreteDistribution& d, unsigned n, const Rational& eta) {
  if (n == 0) throw Error(ErrorCode::OrderTooSmall, "order must be >= 1");
  if (n == 1) return cdf(d, eta);
  return lower_partial_moment(d, eta, n - 1) / factorial(n - 1);
}

PiecewisePolynomial difference_pp(const DiscreteDistribution& x, const DiscreteDistribution& y, unsigned n) {
  if (n < 2) throw Error(ErrorCode::OrderTooSmall, "piecewise representation needs order >= 2");
  std::vector<Rational> grid;
  grid.reserve(x.size() + y.size());
  for (const auto& a : x.atoms()) grid.push_back(a.x);
  for (const auto& a : y.atoms()) grid.push_back(a.x);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const auto fx = cumulative_pieces(x, n, grid);
  const auto fy = cumulative_pieces(y, n, grid);
  std::vector<Polynomial> pieces;
  pieces.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) pieces.push_back(fy[i] - fx[i]);
  return {std::move(grid), std::move(pieces)};
}

}  // namespace hsd
