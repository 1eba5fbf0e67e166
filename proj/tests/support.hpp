#pragma once

#include <random>

#include "qseries/series.hpp"

namespace qtest {

using qseries::Rational;
using qseries::Series;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240617);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Small rationals, zero about a quarter of the time.
inline Rational random_rational() {
  if (uniform(0, 3) == 0) {
    return Rational(0);
  }
  return Rational(uniform(-9, 9), uniform(1, 5));
}

inline Series random_series(int lower, int order) {
  std::vector<Rational> c;
  for (int e = lower; e <= order; ++e) {
    c.push_back(random_rational());
  }
  return Series::from_coefficients(lower, std::move(c), order);
}

/// Random series whose leading coefficient at `lower` is nonzero.
inline Series random_unit(int lower, int order) {
  Series s = random_series(lower, order);
  if (s.coef(lower).is_zero()) {
    s = s + Series::monomial(Rational(uniform(1, 4)), lower, order);
  }
  return s;
}

}  // namespace qtest
