#include "qseries/series.hpp"

namespace qseries {

Series reduce_mod(const Series& s, long m) {
  if (m < 2) {
    throw ModularReductionError("modulus must be at least 2");
  }
  return s.map([m](const Rational& c) { return Rational(mod_residue(c, m)); });
}

Series deriv_at_one(const DualSeries& s) {
  return s.map([](const DualRational& d) { return d.deriv(); });
}

Series value_part(const DualSeries& s) {
  return s.map([](const DualRational& d) { return d.value(); });
}

}  // namespace qseries
