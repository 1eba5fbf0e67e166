#include "qseries/lerch.hpp"

#include <map>

#include "qseries/products.hpp"

namespace qseries {

void BilateralSpec::validate() const {
  if (A <= 0) {
    throw InvalidConstruction("bilateral quadratic coefficient must be positive: " + str());
  }
  if ((A + B) % 2 != 0) {
    throw InvalidConstruction("A + B must be even so every exponent is integral: " + str());
  }
  if (D == 0) {
    if (E == 0) {
      throw PoleError("every denominator vanishes: " + str());
    }
    return;
  }
  if (E % D == 0) {
    const long m = -E / D;
    if (!(primed && m == 0)) {
      throw PoleError("denominator vanishes at m = " + std::to_string(m) + ": " + str());
    }
  }
}

std::string BilateralSpec::str() const {
  return std::string(primed ? "primed" : "bilateral") + "(A=" + std::to_string(A) + ", B=" + std::to_string(B) +
         ", C=" + std::to_string(C) + ", D=" + std::to_string(D) + ", E=" + std::to_string(E) + ")";
}

namespace {

/// Lowest exponent the m-th term contributes after the rewrite.
long term_floor(const BilateralSpec& spec, long m) {
  const long e = spec.exponent(m);
  const long k = spec.denominator(m);
  return k > 0 ? e : e - k;
}

/// Adds the m-th term into `acc` (exponent -> integer coefficient).
void accumulate_term(const BilateralSpec& spec, long m, int order, std::map<long, long>& acc) {
  const long k = spec.denominator(m);
  if (k == 0) {
    throw PoleError("denominator vanishes at m = " + std::to_string(m) + ": " + spec.str());
  }
  long sign = (m % 2 == 0) ? 1 : -1;
  long start = spec.exponent(m);
  long step = k;
  if (k < 0) {
    sign = -sign;
    step = -k;
    start += step;
  }
  for (long e = start; e <= order; e += step) {
    acc[e] += sign;
  }
}

Series from_map(const std::map<long, long>& acc, int order) {
  int lower = 0;
  for (const auto& [e, c] : acc) {
    if (c != 0) {
      lower = std::min(lower, static_cast<int>(e));
      break;
    }
  }
  std::vector<Rational> coefs(static_cast<std::size_t>(std::max(0, order - lower + 1)));
  for (const auto& [e, c] : acc) {
    if (c != 0 && e <= order) {
      coefs[static_cast<std::size_t>(e - lower)] = Rational(c);
    }
  }
  return Series::from_coefficients(lower, std::move(coefs), order);
}

}  // namespace

Series bilateral_term(const BilateralSpec& spec, long m, int order) {
  std::map<long, long> acc;
  accumulate_term(spec, m, order, acc);
  return from_map(acc, order);
}

Series eval_bilateral(const BilateralSpec& spec, int order) {
  spec.validate();
  std::map<long, long> acc;
  // Beyond this the quadratic has certainly outrun any linear term.
  const long hard_limit = 4L * (std::abs(order) + std::abs(spec.B) + std::abs(spec.C) + std::abs(spec.D) +
                                std::abs(spec.E)) + 16;
  for (long dir : {1L, -1L}) {
    int past = 0;
    long prev_floor = 0;
    for (long m = (dir == 1 ? 0 : -1);; m += dir) {
      if (std::abs(m) > hard_limit) {
        throw DivergenceError("m-range did not terminate for " + spec.str());
      }
      const bool skipped = spec.primed && m == 0;
      const long floor = skipped ? spec.exponent(0) : term_floor(spec, m);
      if (floor > order) {
        past = (past > 0 && floor < prev_floor) ? 1 : past + 1;
        if (past >= 3) {
          break;
        }
      } else {
        past = 0;
        if (!skipped) {
          accumulate_term(spec, m, order, acc);
        }
      }
      prev_floor = floor;
    }
  }
  return from_map(acc, order);
}

Series eval_primed(const BilateralSpec& spec, int order) {
  if (!spec.primed) {
    throw InvalidConstruction("eval_primed needs a primed spec: " + spec.str());
  }
  return eval_bilateral(spec, order);
}

Series build_to_order(int order, const std::function<Series(int)>& build) {
  int margin = 0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Series s = build(order + margin);
    if (s.order() >= order) {
      return s.truncated(order);
    }
    margin += order - s.order();
  }
  throw DivergenceError("could not reach validity order " + std::to_string(order));
}

namespace {

PochSpec<Rational> factor(int a, int M) { return PochSpec<Rational>{Rational(1), a, M, std::nullopt}; }

Series divide_theta(Series s, int b, int M) {
  for (int a : theta_factors(b, M)) {
    s = poch_divide(std::move(s), factor(a, M));
  }
  return s;
}

Series times_theta(Series s, int b, int M) {
  for (int a : theta_factors(b, M)) {
    s = poch_times(std::move(s), factor(a, M));
  }
  return s;
}

}  // namespace

Series appell_m(int a, int M, int b, int order) {
  if (M < 1) {
    throw InvalidConstruction("appell_m modulus must be positive");
  }
  theta_factors(b, M);
  const BilateralSpec spec{M, M + 2 * b, 0, M, a + b, false};
  return build_to_order(order, [&](int work) {
    Series sum = eval_bilateral(spec, work);
    return -divide_theta(sum.shifted(b), b, M);
  });
}

Series appell_change_z(int a, int M, int b0, int b1, int order) {
  if (M < 1) {
    throw InvalidConstruction("appell_change_z modulus must be positive");
  }
  for (int b : {b0, b1, a + b0, a + b1}) {
    theta_factors(b, M);
  }
  if ((b1 - b0) % M == 0 || (a + b0 + b1) % M == 0) {
    return Series::zero(order);
  }
  return build_to_order(order, [&](int work) {
    Series s = Series::monomial(Rational(1), b0, std::max(work, b0));
    for (int b : {b0, b1, a + b0, a + b1}) {
      s = divide_theta(std::move(s), b, M);
    }
    s = times_theta(std::move(s), b1 - b0, M);
    s = times_theta(std::move(s), a + b0 + b1, M);
    for (int i = 0; i < 3; ++i) {
      s = poch_times(std::move(s), factor(M, M));
    }
    return s;
  });
}

Series lambert(int a, int b, int c, int d, int order) {
  if (d <= 0 || c < 0) {
    throw PoleError("lambert denominator exponent d + c j must stay positive");
  }
  if (a <= 0) {
    throw DivergenceError("lambert numerator step must be positive");
  }
  std::map<long, long> acc;
  for (long j = 0; b + a * j <= order; ++j) {
    const long k = d + c * j;
    if (k == 0) {
      throw PoleError("lambert denominator vanishes");
    }
    for (long e = b + a * j; e <= order; e += k) {
      acc[e] += 1;
    }
  }
  return from_map(acc, order);
}

Series master_numerator(int k, int order) {
  if (k < 2) {
    throw InvalidConstruction("master series needs k >= 2");
  }
  Series total = Series::zero(order);
  for (int n = 1; n * (n + 1) / 2 <= order; ++n) {
    Series t = Series::monomial(Rational(n % 2 == 0 ? 1 : -1), n * (n + 1) / 2, order);
    for (int i = 0; i < k - 2; ++i) {
      t = t.mul_binomial(Rational(1), n);
    }
    t = t.mul_binomial(Rational(-1), n).div_binomial(Rational(1), k * n);
    total += t;
  }
  return total;
}

Series build_master_lhs(int k, int order) {
  return poch_divide(master_numerator(k, order), factor(1, 1));
}

}  // namespace qseries
