#include "qseries/products.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace qseries {

namespace {

PochSpec<Rational> infinite(int a, int M) { return PochSpec<Rational>{Rational(1), a, M, std::nullopt}; }

int negative_part(const std::vector<int>& exps, int M) {
  int total = 0;
  for (int a : exps) {
    for (int e = a; e < 0; e += M) {
      total += e;
    }
  }
  return total;
}

}  // namespace

Series product_quotient(const ProductQuotient& pq, int order) {
  if (pq.modulus < 1) {
    throw DivergenceError("product modulus must be positive");
  }
  // Numerator factors with negative exponents lower the validity; start high
  // enough that the final truncation is exact.
  const int margin = -negative_part(pq.num, pq.modulus);
  Series s = Series::monomial(Rational(1), pq.shift, std::max(order + margin, pq.shift));
  for (int a : pq.den) {
    s = poch_divide(std::move(s), infinite(a, pq.modulus));
  }
  for (int a : pq.num) {
    s = poch_times(std::move(s), infinite(a, pq.modulus));
  }
  return s.truncated(order);
}

std::vector<int> theta_factors(int b, int M) {
  if (M < 1) {
    throw InvalidConstruction("theta modulus must be positive");
  }
  if (b % M == 0) {
    throw ZeroThetaError("j(q^" + std::to_string(b) + "; q^" + std::to_string(M) + ") vanishes identically");
  }
  return {b, M - b, M};
}

Series jtheta(int b, int M, int order) {
  return product_quotient(ProductQuotient{M, theta_factors(b, M), {}, 0}, order);
}

ProductName ProductName::parse(std::string_view text) {
  using K = Kind;
  static const std::map<std::string, K, std::less<>> simple = {
      {"G", K::G}, {"H", K::H}, {"L", K::L}, {"N", K::N}, {"Q", K::Q},         {"A", K::A},
      {"B", K::B}, {"C", K::C}, {"D", K::D}, {"E", K::E}, {"euler", K::Euler},
  };
  if (auto it = simple.find(text); it != simple.end()) {
    return ProductName{it->second, 0};
  }
  for (auto [prefix, kind, max] : {std::tuple{std::string_view("P25("), K::P25, 4},
                                   std::tuple{std::string_view("P49("), K::P49, 6}}) {
    if (text.starts_with(prefix) && text.ends_with(")")) {
      const std::string inner(text.substr(prefix.size(), text.size() - prefix.size() - 1));
      try {
        std::size_t used = 0;
        const int i = std::stoi(inner, &used);
        if (used == inner.size() && i >= 0 && i <= max) {
          return ProductName{kind, i};
        }
      } catch (const std::exception&) {
      }
      throw UsageError("bad product index in '" + std::string(text) + "'");
    }
  }
  throw UsageError("unknown product '" + std::string(text) + "'");
}

std::string ProductName::str() const {
  switch (kind) {
    case Kind::G: return "G";
    case Kind::H: return "H";
    case Kind::L: return "L";
    case Kind::N: return "N";
    case Kind::Q: return "Q";
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
    case Kind::E: return "E";
    case Kind::Euler: return "euler";
    case Kind::P25: return "P25(" + std::to_string(index) + ")";
    case Kind::P49: return "P49(" + std::to_string(index) + ")";
  }
  return "?";
}

ProductQuotient ProductName::quotient() const {
  switch (kind) {
    case Kind::G: return {5, {}, {1, 4}};
    case Kind::H: return {5, {}, {2, 3}};
    case Kind::L: return {7, {}, {1, 6}};
    case Kind::N: return {7, {}, {2, 5}};
    case Kind::Q: return {7, {}, {3, 4}};
    case Kind::A: return {49, {49}, {7, 42}};
    case Kind::B: return {49, {14, 35, 49}, {7, 21, 28, 42}};
    case Kind::C: return {49, {49}, {14, 35}};
    case Kind::D: return {49, {49}, {21, 28}};
    case Kind::E: return {49, {7, 42, 49}, {14, 21, 28, 35}};
    case Kind::Euler: return {1, {1}, {}};
    case Kind::P25:
      return index == 0 ? ProductQuotient{25, {25}, {}} : ProductQuotient{25, {5 * index, 25 - 5 * index}, {}};
    case Kind::P49:
      return index == 0 ? ProductQuotient{49, {49}, {}} : ProductQuotient{49, {7 * index, 49 - 7 * index}, {}};
  }
  return {};
}

Series named_product(const ProductName& name, int order) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, Series> cache;
  const auto key = std::make_pair(name.str(), order);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) {
      return it->second;
    }
  }
  Series s = product_quotient(name.quotient(), order);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(s)).first->second;
}

Series named_product(std::string_view name, int order) { return named_product(ProductName::parse(name), order); }

namespace {

template <class S>
using ZS = QSeries<ZLaurent<S>>;

template <class S>
ZS<S> divide_by_euler(ZS<S> s) {
  const int reach = s.order() - s.valuation();
  for (int m = 1; m <= reach; ++m) {
    s = s.div_binomial(ZLaurent<S>(1L), m);
  }
  return s;
}

}  // namespace

template <class S>
QSeries<ZLaurent<S>> crank_gf(const S& x, int order) {
  using Z = ZLaurent<S>;
  const Z zx(x);
  const Z z = Z::monomial(S(1L), 1);
  const Z x_over_z = Z::monomial(x, -1);
  auto s = ZS<S>::one(order);
  for (int m = 1; m <= order; ++m) {
    s = s.div_binomial(z, m).div_binomial(x_over_z, m).mul_binomial(zx, m);
  }
  return s;
}

template <class S>
QSeries<ZLaurent<S>> crank_decomposition(const S& x, int order, bool leading_one) {
  using Z = ZLaurent<S>;
  const Z zx(x);
  const Z z = Z::monomial(S(1L), 1);
  const Z x_over_z = Z::monomial(x, -1);
  // Terms with n(n-1)/2 > order only reach beyond the truncation.
  int n_max = 0;
  while ((n_max + 1) * n_max / 2 <= order) {
    ++n_max;
  }
  const int work = order + n_max;
  auto total = leading_one ? ZS<S>::one(work) : ZS<S>::zero(work);
  for (int n = 1; n <= n_max; ++n) {
    const int tri = n * (n + 1) / 2;
    if (tri > work) {
      break;
    }
    auto t = ZS<S>::monomial(Z(S(n % 2 == 1 ? 1L : -1L)), tri, work);
    for (int i = 1; i <= n; ++i) {
      t = t.mul_binomial(zx, i);
    }
    for (int i = 1; i < n; ++i) {
      t = t.div_binomial(Z(1L), i);
    }
    auto first = t.div_binomial(z, n).shifted(-n);
    auto second = t.div_binomial(x_over_z, n).scaled(x_over_z);
    total = total + (first + second).truncated(order);
  }
  return divide_by_euler<S>(total.truncated(order));
}

template QSeries<ZLaurent<Rational>> crank_gf(const Rational&, int);
template QSeries<ZLaurent<DualRational>> crank_gf(const DualRational&, int);
template QSeries<ZLaurent<Rational>> crank_decomposition(const Rational&, int, bool);
template QSeries<ZLaurent<DualRational>> crank_decomposition(const DualRational&, int, bool);

DualSeries crank_class_series(int k, int b, int order, bool poch_n) {
  if (k < 2 || b < 1 || b >= k) {
    throw InvalidConstruction("crank class needs 1 <= b < k");
  }
  const DualRational x(Rational(1), Rational(1));
  auto xpow = [&](int p) {
    DualRational r(1L);
    for (int i = 0; i < p; ++i) {
      r *= x;
    }
    return r;
  };
  const DualRational xkb = xpow(k - b);
  const DualRational xk = xpow(k);
  DualSeries total = DualSeries::zero(order);
  for (int n = 1; n * (n + 1) / 2 <= order; ++n) {
    auto t = DualSeries::monomial(DualRational(n % 2 == 1 ? 1L : -1L), n * (n + 1) / 2, order);
    for (int i = 1; i <= n; ++i) {
      t = t.mul_binomial(x, i);
    }
    for (int i = 1; i < (poch_n ? n + 1 : n); ++i) {
      t = t.div_binomial(DualRational(1L), i);
    }
    auto first = t.shifted(n * (b - 1)).truncated(order).div_binomial(DualRational(1L), n * k);
    auto second = t.shifted((k - b - 1) * n).truncated(order).scaled(xkb).div_binomial(xk, n * k);
    total = total + first + second;
  }
  for (int m = 1; m <= order; ++m) {
    total = total.div_binomial(DualRational(1L), m);
  }
  return total;
}

}  // namespace qseries
