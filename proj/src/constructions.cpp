#include "hsd/constructions.hpp"

#include "hsd/dominance.hpp"
#include "hsd/error.hpp"

namespace hsd {

namespace {

Rational r(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }

}  // namespace

ConstructedPair example_counter_pair(const Rational& eps) {
  if (!(sgn(eps) > 0 && eps < r(1, 9))) {
    throw Error(ErrorCode::EpsilonOutOfRange, "need 0 < eps < 1/9, got " + to_string(eps));
  }
  auto x = make_distribution({{r(2, 9), r(8, 9) + eps}, {r(1), r(1, 9) - eps}});
  auto y = make_distribution({{r(0), r(1, 3)}, {r(4, 9), r(2, 3)}});
  return {std::move(x), std::move(y), {{"eps", eps}}, "example_counter_pair"};
}

ConstructedPair lemma_sequence_pair(const Rational& m) {
  if (!(sgn(m) > 0 && m < 1)) throw Error(ErrorCode::MOutOfRange, "need 0 < m < 1, got " + to_string(m));
  const Rational eps = m / (54 * (1 + m));
  auto x = make_distribution({{r(2), r(8, 9) + eps}, {8 + m, r(1, 9) - eps}});
  auto y = make_distribution({{r(0), r(1, 3)}, {r(4), r(2, 3)}});
  return {std::move(x), std::move(y), {{"m", m}, {"eps", eps}}, "lemma_sequence_pair"};
}

Rational lemma_ratio(const Rational& m) {
  if (!(sgn(m) > 0 && m < 1)) throw Error(ErrorCode::MOutOfRange, "need 0 < m < 1, got " + to_string(m));
  const Rational eps = m / (54 * (1 + m));
  const Rational m2 = m * m;
  return (16 * m / eps - 540 - 9 * m2 + m2 / eps - 144 * m) / (45 * m);
}

ConstructedPair rescale_pair(const ConstructedPair& pair, const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d) {
  if (!(a < b) || !(c < d)) throw Error(ErrorCode::BadIntervals, "rescaling needs a < b and c < d");
  if (!support_within(pair.x, a, b) || !support_within(pair.y, a, b)) {
    throw Error(ErrorCode::SupportOutsideInterval, "pair does not live in the source interval");
  }
  const Rational lambda = (d - c) / (b - a);
  const Rational shift = (b * c - a * d) / (b - a);
  ConstructedPair out{affine_transform(pair.x, lambda, shift), affine_transform(pair.y, lambda, shift), pair.params,
                      pair.provenance + "+rescale"};
  out.params["lambda"] = lambda;
  out.params["shift"] = shift;
  return out;
}

ConstructedPair gamma_scaled_pair(const ConstructedPair& pair, const Rational& c, const Rational& d) {
  if (!(c < d) || sgn(c) < 0) throw Error(ErrorCode::BadIntervals, "need 0 <= c < d");
  if (sgn(pair.x.support().min) < 0 || sgn(pair.y.support().min) < 0) {
    throw Error(ErrorCode::SupportOutsideInterval, "gamma scaling needs nonnegative supports");
  }
  const Rational mean_gap = raw_moment(pair.x, 1) - raw_moment(pair.y, 1);
  if (sgn(mean_gap) <= 0) throw Error(ErrorCode::MeansNotOrdered, "need E[X] > E[Y]");
  const Rational ratio = (raw_moment(pair.x, 2) - raw_moment(pair.y, 2)) / mean_gap;
  if (ratio < 2 * d) {
    throw Error(ErrorCode::RatioTooSmall, "moment ratio " + to_string(ratio) + " below 2d = " + to_string(2 * d));
  }
  const Rational gamma = 2 * d / ratio;
  ConstructedPair out{affine_transform(pair.x, gamma, 0), affine_transform(pair.y, gamma, 0), pair.params,
                      pair.provenance + "+gamma"};
  out.params["ratio"] = ratio;
  out.params["gamma"] = gamma;
  return out;
}

std::optional<Rational> lemma_threshold(const Rational& min_ratio, unsigned max_halvings) {
  Rational m(1);
  for (unsigned j = 1; j <= max_halvings; ++j) {
    m /= 2;
    if (lemma_ratio(m) < min_ratio) continue;
    const auto pair = lemma_sequence_pair(m);
    if (check_nsd_real(pair.x, pair.y, 4)) return m;
  }
  return std::nullopt;
}

ConstructedPair interval_counter_pair(const Rational& c, const Rational& d) {
  if (!(c < d) || c < 9) throw Error(ErrorCode::BadIntervals, "need 9 <= c < d");
  const auto m = lemma_threshold(2 * d);
  if (!m) throw Error(ErrorCode::RatioTooSmall, "no lemma pair within the halving budget");
  auto out = gamma_scaled_pair(lemma_sequence_pair(*m), c, d);
  out.params["c"] = c;
  out.params["d"] = d;
  return out;
}

}  // namespace hsd
