#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

/// prod_{i=0}^{count-1} (1 - coef q^{a_exp + i*step}); no count means the
/// infinite product.
template <CoefRing R = Rational>
struct PochSpec {
  R coef{1};
  int a_exp = 1;
  int step = 1;
  std::optional<int> count;
};

namespace detail {

template <CoefRing R>
void check_poch(const PochSpec<R>& spec) {
  if (!spec.count && spec.step <= 0) {
    throw DivergenceError("infinite product with non-positive step " + std::to_string(spec.step));
  }
  if (spec.count && *spec.count < 0) {
    throw InvalidConstruction("negative factor count");
  }
}

/// Calls f(exponent) for every factor whose exponent is negative, then
/// g(exponent) for the non-negative ones up to `limit(current)`.
template <CoefRing R, class Neg, class Pos>
void walk_factors(const PochSpec<R>& spec, Neg&& neg, Pos&& pos) {
  check_poch(spec);
  if (spec.count) {
    for (int i = 0; i < *spec.count; ++i) {
      const int e = spec.a_exp + i * spec.step;
      if (e < 0) {
        neg(e);
      }
    }
    for (int i = 0; i < *spec.count; ++i) {
      const int e = spec.a_exp + i * spec.step;
      if (e >= 0 && !pos(e)) {
        if (spec.step > 0) {
          break;
        }
      }
    }
    return;
  }
  int e = spec.a_exp;
  for (; e < 0; e += spec.step) {
    neg(e);
  }
  while (pos(e)) {
    e += spec.step;
  }
}

}  // namespace detail

/// s times the product. Factors beyond the reach of s are skipped.
template <CoefRing R>
QSeries<R> poch_times(QSeries<R> s, const PochSpec<R>& spec) {
  std::vector<int> negatives;
  detail::walk_factors(
      spec, [&](int e) { negatives.push_back(e); },
      [&](int e) {
        if (e > s.order() - s.valuation()) {
          return false;
        }
        s = s.mul_binomial(spec.coef, e);
        return true;
      });
  for (int e : negatives) {
    s = s.mul_binomial(spec.coef, e);
  }
  return s;
}

/// s divided by the product; negative-exponent factors first, since each
/// raises the validity order.
template <CoefRing R>
QSeries<R> poch_divide(QSeries<R> s, const PochSpec<R>& spec) {
  std::vector<int> negatives;
  detail::walk_factors(spec, [&](int e) { negatives.push_back(e); }, [](int) { return false; });
  for (int e : negatives) {
    s = s.div_binomial(spec.coef, e);
  }
  detail::walk_factors(
      spec, [](int) {},
      [&](int e) {
        if (e > 0 && e > s.order() - s.valuation()) {
          return false;
        }
        s = s.div_binomial(spec.coef, e);
        return true;
      });
  return s;
}

/// The truncated product, valid to `order`. Negative-exponent factors are
/// multiplied exactly; their exponent sum is the Laurent lower bound.
template <CoefRing R = Rational>
QSeries<R> poch(const PochSpec<R>& spec, int order) {
  int neg_sum = 0;
  detail::walk_factors(spec, [&](int e) { neg_sum += e; }, [](int) { return false; });
  return poch_times(QSeries<R>::one(order - neg_sum), spec).truncated(order);
}

/// prod over num of (q^a; q^M)_inf divided by prod over den of the same,
/// times q^shift; repeated entries are powers.
struct ProductQuotient {
  int modulus = 1;
  std::vector<int> num;
  std::vector<int> den;
  int shift = 0;
};

Series product_quotient(const ProductQuotient& pq, int order);

/// j(q^b; q^M) = (q^b, q^{M-b}, q^M; q^M)_inf. Throws ZeroThetaError when
/// b is a multiple of M.
Series jtheta(int b, int M, int order);

/// The three factor exponents of j(q^b; q^M); throws ZeroThetaError.
std::vector<int> theta_factors(int b, int M);

/// Named products: G, H, L, N, Q, A..E, euler, P25(i), P49(i).
struct ProductName {
  enum class Kind { G, H, L, N, Q, A, B, C, D, E, Euler, P25, P49 };
  Kind kind = Kind::Euler;
  int index = 0;

  static ProductName parse(std::string_view text);
  std::string str() const;
  ProductQuotient quotient() const;
};

/// Memoized per (name, order); safe to call from several threads.
Series named_product(const ProductName& name, int order);
Series named_product(std::string_view name, int order);

/// Crank generating function (xq;q)_inf / (zq, xq/z; q)_inf with z formal.
template <class S>
QSeries<ZLaurent<S>> crank_gf(const S& x, int order);

/// Right side of the decomposition of the crank generating function:
/// 1/(q;q)_inf [lead + sum_{n>=1} (-1)^{n-1} (xq;q)_n/(q;q)_{n-1} q^{n(n+1)/2}
///   (1/(q^n (1 - z q^n)) + (x/z)/(1 - x q^n / z))], lead being 1 or 0.
template <class S>
QSeries<ZLaurent<S>> crank_decomposition(const S& x, int order, bool leading_one);

/// The z-class-b, modulus-k sum with x = 1 + eps:
/// 1/(q;q)_inf sum_{n>=1} (-1)^{n-1} (xq;q)_n/(q;q)_{n-1} q^{n(n+1)/2}
///   (q^{n(b-1)}/(1 - q^{nk}) + x^{k-b} q^{(k-b-1)n}/(1 - x^k q^{kn})).
/// With `poch_n` the denominator is (q;q)_n instead.
DualSeries crank_class_series(int k, int b, int order, bool poch_n = false);

}  // namespace qseries
