#include "hsd/distribution.hpp"

#include "hsd/error.hpp"

#include <algorithm>
#include <map>

namespace hsd {

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)), support_{atoms_.front().x, atoms_.back().x} {}

DiscreteDistribution DiscreteDistribution::from_pairs(std::span<const std::pair<Rational, Rational>> pairs) {
  std::map<Rational, Rational> merged;
  Rational total(0);
  for (const auto& [x, p] : pairs) {
    if (sgn(p) < 0) throw Error(ErrorCode::NegativeProbability, "probability " + to_string(p) + " at " + to_string(x));
    total += p;
    if (p == 0) continue;
    merged[x] += p;
  }
  if (merged.empty()) throw Error(ErrorCode::Empty, "no atom with positive probability");
  if (total != 1) throw Error(ErrorCode::MassNotOne, "total mass is " + to_string(total));
  std::vector<Atom> atoms;
  atoms.reserve(merged.size());
  for (auto& [x, p] : merged) atoms.push_back({x, p});
  return DiscreteDistribution(std::move(atoms));
}

DiscreteDistribution DiscreteDistribution::point_mass(const Rational& x) {
  return DiscreteDistribution(std::vector<Atom>{{x, Rational(1)}});
}

DiscreteDistribution make_distribution(std::span<const std::pair<Rational, Rational>> pairs) {
  return DiscreteDistribution::from_pairs(pairs);
}

DiscreteDistribution make_distribution(std::initializer_list<std::pair<Rational, Rational>> pairs) {
  return DiscreteDistribution::from_pairs(std::span(pairs.begin(), pairs.size()));
}

Rational raw_moment(const DiscreteDistribution& d, unsigned k) {
  Rational sum(0);
  for (const auto& a : d.atoms()) sum += a.p * pow(a.x, k);
  return sum;
}

Rational shifted_moment(const DiscreteDistribution& d, const Rational& b, unsigned k) {
  Rational sum(0);
  for (const auto& a : d.atoms()) sum += a.p * pow(Rational(b - a.x), k);
  return sum;
}

Rational lower_partial_moment(const DiscreteDistribution& d, const Rational& eta, unsigned k) {
  Rational sum(0);
  for (const auto& a : d.atoms()) {
    if (a.x > eta) break;
    sum += a.p * pow(Rational(eta - a.x), k);
  }
  return sum;
}

Rational cdf(const DiscreteDistribution& d, const Rational& eta) {
  Rational sum(0);
  for (const auto& a : d.atoms()) {
    if (a.x > eta) break;
    sum += a.p;
  }
  return sum;
}

DiscreteDistribution affine_transform(const DiscreteDistribution& d, const Rational& scale, const Rational& shift) {
  if (scale == 0) throw Error(ErrorCode::ZeroScale, "affine transform with zero scale");
  std::vector<std::pair<Rational, Rational>> pairs;
  pairs.reserve(d.size());
  for (const auto& a : d.atoms()) pairs.emplace_back(scale * a.x + shift, a.p);
  return DiscreteDistribution::from_pairs(pairs);
}

DiscreteDistribution mixture(const DiscreteDistribution& d, const DiscreteDistribution& e, const Rational& weight) {
  if (weight < 0 || weight > 1) throw Error(ErrorCode::InvalidArgument, "mixture weight outside [0, 1]");
  std::vector<std::pair<Rational, Rational>> pairs;
  for (const auto& a : d.atoms()) pairs.emplace_back(a.x, weight * a.p);
  for (const auto& a : e.atoms()) pairs.emplace_back(a.x, (1 - weight) * a.p);
  return DiscreteDistribution::from_pairs(pairs);
}

bool support_within(const DiscreteDistribution& d, const Rational& a, const Rational& b) {
  return a <= d.support().min && d.support().max <= b;
}

}  // namespace hsd
