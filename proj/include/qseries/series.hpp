#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/kernels.hpp"
#include "qseries/ring.hpp"

namespace qseries {

/// Truncated Laurent series sum_{e=lower}^{order} c_e q^e over a coefficient
/// ring. `order` is the validity bound: every coefficient up to and including
/// q^order is exact, nothing beyond it is known. Coefficients below `lower`
/// are zero.
template <CoefRing R>
class QSeries {
 public:
  using ring_type = R;

  /// The zero series, valid to q^0.
  QSeries() : QSeries(0) {}

  /// The zero series, valid to q^order.
  explicit QSeries(int order) : lower_(std::min(0, order)), order_(order) {
    coefs_.assign(span_len(), R{});
  }

  static QSeries zero(int order) { return QSeries(order); }

  static QSeries one(int order) { return constant(R{1}, order); }

  static QSeries constant(R c, int order) {
    if (order < 0) {
      return QSeries(order);
    }
    return monomial(std::move(c), 0, order);
  }

  /// c q^e, valid to q^order. Throws InvalidConstruction when e > order.
  static QSeries monomial(R c, int e, int order) {
    if (e > order) {
      throw InvalidConstruction("monomial exponent " + std::to_string(e) + " exceeds order " +
                                std::to_string(order));
    }
    QSeries s;
    s.lower_ = e;
    s.order_ = order;
    s.coefs_.assign(s.span_len(), R{});
    s.coefs_[0] = std::move(c);
    return s;
  }

  /// Coefficients of q^lower, q^(lower+1), ...; entries past `order` are
  /// dropped and missing ones are zero.
  static QSeries from_coefficients(int lower, std::vector<R> coefs, int order) {
    QSeries s;
    s.lower_ = std::min(lower, order);
    s.order_ = order;
    if (lower > order) {
      s.coefs_.assign(1, R{});
      return s;
    }
    coefs.resize(s.span_len(), R{});
    s.coefs_ = std::move(coefs);
    return s;
  }

  int lower() const { return lower_; }
  int order() const { return order_; }

  /// Coefficient of q^e. Below `lower` it is zero; beyond `order` it is
  /// unknown and asking for it throws std::out_of_range.
  R coef(int e) const {
    if (e > order_) {
      throw std::out_of_range("coefficient of q^" + std::to_string(e) + " is beyond the validity order " +
                              std::to_string(order_));
    }
    if (e < lower_) {
      return R{};
    }
    return coefs_[static_cast<std::size_t>(e - lower_)];
  }

  std::span<const R> coefficients() const { return coefs_; }

  /// Lowest exponent with a nonzero coefficient; order + 1 when all tracked
  /// coefficients vanish.
  int valuation() const {
    for (std::size_t i = 0; i < coefs_.size(); ++i) {
      if (!is_zero(coefs_[i])) {
        return lower_ + static_cast<int>(i);
      }
    }
    return order_ + 1;
  }

  bool is_zero_series() const { return valuation() > order_; }

  /// Same series with validity reduced to `order` (never raised).
  QSeries truncated(int order) const {
    if (order >= order_) {
      return *this;
    }
    QSeries s;
    s.lower_ = std::min(lower_, order);
    s.order_ = order;
    s.coefs_.assign(s.span_len(), R{});
    for (int e = s.lower_; e <= order; ++e) {
      if (e >= lower_) {
        s.coefs_[static_cast<std::size_t>(e - s.lower_)] = coefs_[static_cast<std::size_t>(e - lower_)];
      }
    }
    return s;
  }

  /// q^k times the series.
  QSeries shifted(int k) const {
    QSeries s = *this;
    s.lower_ += k;
    s.order_ += k;
    return s;
  }

  QSeries scaled(const R& c) const {
    QSeries s = *this;
    for (auto& x : s.coefs_) {
      if (!is_zero(x)) {
        x = c * x;
      }
    }
    return s;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) { return combine(a, b, false); }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return combine(a, b, true); }
  friend QSeries operator-(const QSeries& a) {
    QSeries s = a;
    for (auto& x : s.coefs_) {
      x = -x;
    }
    return s;
  }
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  /// Product valid to min(N1 + v2, N2 + v1) where v is the valuation.
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const int va = a.valuation();
    const int vb = b.valuation();
    const int order = std::min(a.order_ + vb, b.order_ + va);
    const int lower = va + vb;
    if (lower > order) {
      return QSeries(order);
    }
    const auto len = static_cast<std::size_t>(order - lower + 1);
    std::span<const R> sa(a.coefs_);
    std::span<const R> sb(b.coefs_);
    sa = sa.subspan(static_cast<std::size_t>(va - a.lower_),
                    std::min(len, static_cast<std::size_t>(a.order_ - va + 1)));
    sb = sb.subspan(static_cast<std::size_t>(vb - b.lower_),
                    std::min(len, static_cast<std::size_t>(b.order_ - vb + 1)));
    return from_coefficients(lower, kernels::convolve(sa, sb, len), order);
  }

  /// Multiplicative inverse. Requires a nonzero series whose lowest
  /// coefficient is a unit; result lower = -valuation, validity N - 2v.
  QSeries inverse() const {
    const int v = valuation();
    if (v > order_) {
      throw NoInverse("cannot invert a series that is zero up to q^" + std::to_string(order_));
    }
    auto inv0 = try_invert(coefs_[static_cast<std::size_t>(v - lower_)]);
    if (!inv0) {
      throw NoInverse("leading coefficient " + to_string(coefs_[static_cast<std::size_t>(v - lower_)]) +
                      " is not a unit");
    }
    const auto n = static_cast<std::size_t>(order_ - v);
    const R* a = coefs_.data() + (v - lower_);
    std::vector<R> b(n + 1, R{});
    b[0] = *inv0;
    std::vector<std::size_t> nz;
    for (std::size_t i = 1; i <= n; ++i) {
      if (!is_zero(a[i])) {
        nz.push_back(i);
      }
    }
    for (std::size_t k = 1; k <= n; ++k) {
      R acc{};
      for (std::size_t i : nz) {
        if (i > k) {
          break;
        }
        if (!is_zero(b[k - i])) {
          acc += a[i] * b[k - i];
        }
      }
      if (!is_zero(acc)) {
        b[k] = -(*inv0 * acc);
      }
    }
    return from_coefficients(-v, std::move(b), order_ - 2 * v);
  }

  /// Non-negative powers by squaring; negative powers invert first.
  QSeries pow(int k) const {
    if (k < 0) {
      return inverse().pow(-k);
    }
    QSeries result = one(order_);
    QSeries base = *this;
    while (k > 0) {
      if (k & 1) {
        result = result * base;
      }
      k >>= 1;
      if (k > 0) {
        base = base * base;
      }
    }
    return result;
  }

  /// Times (1 - c q^e). For e < 0 the validity drops by |e|.
  QSeries mul_binomial(const R& c, int e) const { return *this - shifted(e).scaled(c); }

  /// Divided by (1 - c q^k). For k > 0 this is the recurrence
  /// r[i] = s[i] + c r[i-k]; for k < 0 the identity
  /// 1/(1 - c q^k) = -c^{-1} q^{-k} / (1 - c^{-1} q^{-k}) is used.
  QSeries div_binomial(const R& c, int k) const {
    if (is_zero(c)) {
      return *this;
    }
    if (k == 0) {
      auto inv = try_invert(R{1} - c);
      if (!inv) {
        throw NoInverse("division by the non-unit constant 1 - " + to_string(c));
      }
      return scaled(*inv);
    }
    if (k < 0) {
      auto inv = try_invert(c);
      if (!inv) {
        throw NoInverse("division by 1 - c q^k with k < 0 needs c to be a unit");
      }
      return shifted(-k).div_binomial(*inv, -k).scaled(-*inv);
    }
    QSeries s = *this;
    const auto step = static_cast<std::size_t>(k);
    for (std::size_t i = step; i < s.coefs_.size(); ++i) {
      if (!is_zero(s.coefs_[i - step])) {
        s.coefs_[i] += c * s.coefs_[i - step];
      }
    }
    return s;
  }

  /// q -> q^k. Validity becomes k * order.
  QSeries dilated(int k) const {
    if (k < 1) {
      throw InvalidConstruction("dilation factor must be positive");
    }
    QSeries s;
    s.lower_ = lower_ * k;
    s.order_ = order_ * k;
    s.coefs_.assign(s.span_len(), R{});
    for (std::size_t i = 0; i < coefs_.size(); ++i) {
      s.coefs_[i * static_cast<std::size_t>(k)] = coefs_[i];
    }
    return s;
  }

  /// Component r holds exactly the terms whose exponent is r modulo M, using
  /// the true residue for negative exponents.
  std::vector<QSeries> dissect(int M) const {
    if (M < 1) {
      throw InvalidConstruction("dissection modulus must be positive");
    }
    std::vector<QSeries> parts(static_cast<std::size_t>(M));
    for (auto& p : parts) {
      p = QSeries(order_);
      p.lower_ = lower_;
      p.coefs_.assign(span_len(), R{});
    }
    for (std::size_t i = 0; i < coefs_.size(); ++i) {
      const int e = lower_ + static_cast<int>(i);
      const int r = ((e % M) + M) % M;
      parts[static_cast<std::size_t>(r)].coefs_[i] = coefs_[i];
    }
    return parts;
  }

  /// Applies f to every coefficient; lower and order are kept.
  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<Out> out;
    out.reserve(coefs_.size());
    for (const auto& c : coefs_) {
      out.push_back(f(c));
    }
    return QSeries<Out>::from_coefficients(lower_, std::move(out), order_);
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    if (a.order_ != b.order_) {
      return false;
    }
    for (int e = std::min(a.lower_, b.lower_); e <= a.order_; ++e) {
      if (!(a.coef(e) == b.coef(e))) {
        return false;
      }
    }
    return true;
  }

 private:
  std::size_t span_len() const { return static_cast<std::size_t>(order_ - lower_ + 1); }

  static QSeries combine(const QSeries& a, const QSeries& b, bool subtract) {
    const int order = std::min(a.order_, b.order_);
    const int lower = std::min({a.lower_, b.lower_, order});
    QSeries s;
    s.lower_ = lower;
    s.order_ = order;
    s.coefs_.assign(s.span_len(), R{});
    for (int e = std::max(a.lower_, lower); e <= order; ++e) {
      s.coefs_[static_cast<std::size_t>(e - lower)] = a.coefs_[static_cast<std::size_t>(e - a.lower_)];
    }
    for (int e = std::max(b.lower_, lower); e <= order; ++e) {
      const R& x = b.coefs_[static_cast<std::size_t>(e - b.lower_)];
      if (is_zero(x)) {
        continue;
      }
      auto& dst = s.coefs_[static_cast<std::size_t>(e - lower)];
      if (subtract) {
        dst -= x;
      } else {
        dst += x;
      }
    }
    return s;
  }

  int lower_ = 0;
  int order_ = 0;
  std::vector<R> coefs_;
};

using Series = QSeries<Rational>;
using DualSeries = QSeries<DualRational>;
using ZSeries = QSeries<ZLaurentQ>;
using ZDualSeries = QSeries<ZLaurentD>;

/// Coefficients reduced to integers in [0, m). Throws ModularReductionError
/// for denominators not coprime to m.
Series reduce_mod(const Series& s, long m);

/// The eps-part of every coefficient.
Series deriv_at_one(const DualSeries& s);
/// The eps-free part of every coefficient.
Series value_part(const DualSeries& s);

/// Sums, per power of q, the z-coefficients whose z-exponent is b mod k.
template <class S>
QSeries<S> z_class_extract(const QSeries<ZLaurent<S>>& s, int k, int b) {
  if (k < 1) {
    throw InvalidConstruction("z-class modulus must be positive");
  }
  const int r = ((b % k) + k) % k;
  return s.map([&](const ZLaurent<S>& z) {
    S acc{};
    z.for_each([&](int e, const S& c) {
      if (((e % k) + k) % k == r) {
        acc += c;
      }
    });
    return acc;
  });
}

/// Location and both values of the first disagreeing coefficient.
struct Mismatch {
  int exponent = 0;
  std::string lhs;
  std::string rhs;
};

struct Comparison {
  int effective_order = 0;
  std::optional<Mismatch> mismatch;
  bool equal() const { return !mismatch.has_value(); }
};

/// Compares coefficients from max(min_exp, lowest tracked) up to the smaller
/// validity order (further capped by `cap`), reporting that effective order.
template <CoefRing R>
Comparison compare(const QSeries<R>& a, const QSeries<R>& b, int min_exp = INT_MIN,
                   std::optional<int> cap = std::nullopt) {
  Comparison out;
  out.effective_order = std::min(a.order(), b.order());
  if (cap) {
    out.effective_order = std::min(out.effective_order, *cap);
  }
  const int start = std::max(min_exp, std::min(a.lower(), b.lower()));
  for (int e = start; e <= out.effective_order; ++e) {
    R x = a.coef(e);
    R y = b.coef(e);
    if (!(x == y)) {
      out.mismatch = Mismatch{e, to_string(x), to_string(y)};
      break;
    }
  }
  return out;
}

/// "1 - q^2 + 3/2*q^5 + O(q^11)"; coefficients are rendered with to_string.
template <CoefRing R>
std::string format_series(const QSeries<R>& s) {
  std::string out;
  for (int e = s.lower(); e <= s.order(); ++e) {
    R c = s.coef(e);
    if (is_zero(c)) {
      continue;
    }
    std::string cs = to_string(c);
    const bool compound = cs.find_first_of("+z*") != std::string::npos ||
                          (cs.find('-', 1) != std::string::npos);
    if (compound) {
      cs = "(" + cs + ")";
    }
    if (!out.empty()) {
      if (cs.front() == '-') {
        out += " - ";
        cs.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (e == 0) {
      out += cs;
    } else {
      if (cs == "1") {
        cs.clear();
      } else if (cs == "-1") {
        cs = "-";
      } else {
        cs += "*";
      }
      out += cs + (e == 1 ? "q" : "q^" + std::to_string(e));
    }
  }
  if (out.empty()) {
    out = "0";
  }
  return out + " + O(q^" + std::to_string(s.order() + 1) + ")";
}

}  // namespace qseries
