#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/dual.hpp"
#include "qseries/rational.hpp"

namespace qseries {

/// Finitely supported Laurent polynomial in a formal variable z over a scalar
/// ring. Stored densely from the lowest to the highest nonzero exponent; the
/// zero polynomial has no storage.
template <class Scalar>
class ZLaurent {
 public:
  using scalar_type = Scalar;

  ZLaurent() = default;
  ZLaurent(long c) : ZLaurent(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  ZLaurent(Scalar c) {  // NOLINT(google-explicit-constructor)
    if (!qseries::is_zero(c)) {
      coefs_.push_back(std::move(c));
    }
  }

  static ZLaurent monomial(Scalar c, int exponent) {
    ZLaurent r;
    if (!qseries::is_zero(c)) {
      r.low_ = exponent;
      r.coefs_.push_back(std::move(c));
    }
    return r;
  }

  bool is_zero() const { return coefs_.empty(); }
  /// Valid only for nonzero values.
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coefs_.size()) - 1; }
  std::size_t terms() const {
    return static_cast<std::size_t>(
        std::count_if(coefs_.begin(), coefs_.end(), [](const Scalar& c) { return !qseries::is_zero(c); }));
  }

  Scalar coef(int e) const {
    if (coefs_.empty() || e < low_ || e > max_exponent()) {
      return Scalar{};
    }
    return coefs_[static_cast<std::size_t>(e - low_)];
  }

  /// Calls f(exponent, coefficient) for every nonzero term in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < coefs_.size(); ++i) {
      if (!qseries::is_zero(coefs_[i])) {
        f(low_ + static_cast<int>(i), coefs_[i]);
      }
    }
  }

  /// A unit iff it is a single monomial with an invertible coefficient.
  std::optional<ZLaurent> inverse() const {
    if (coefs_.size() != 1) {
      return std::nullopt;
    }
    auto inv = try_invert(coefs_.front());
    if (!inv) {
      return std::nullopt;
    }
    return monomial(std::move(*inv), -low_);
  }

  ZLaurent& operator+=(const ZLaurent& o) { return accumulate(o, false); }
  ZLaurent& operator-=(const ZLaurent& o) { return accumulate(o, true); }

  ZLaurent& operator*=(const ZLaurent& o) {
    *this = *this * o;
    return *this;
  }

  friend ZLaurent operator+(ZLaurent a, const ZLaurent& b) { return a += b; }
  friend ZLaurent operator-(ZLaurent a, const ZLaurent& b) { return a -= b; }
  friend ZLaurent operator-(ZLaurent a) {
    for (auto& c : a.coefs_) {
      c = -c;
    }
    return a;
  }
  friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
    ZLaurent r;
    if (a.is_zero() || b.is_zero()) {
      return r;
    }
    r.low_ = a.low_ + b.low_;
    r.coefs_.assign(a.coefs_.size() + b.coefs_.size() - 1, Scalar{});
    for (std::size_t i = 0; i < a.coefs_.size(); ++i) {
      if (qseries::is_zero(a.coefs_[i])) {
        continue;
      }
      for (std::size_t j = 0; j < b.coefs_.size(); ++j) {
        r.coefs_[i + j] += a.coefs_[i] * b.coefs_[j];
      }
    }
    r.trim();
    return r;
  }

  friend bool operator==(const ZLaurent& a, const ZLaurent& b) {
    return a.coefs_.empty() ? b.coefs_.empty() : (a.low_ == b.low_ && a.coefs_ == b.coefs_);
  }

  /// Applies `f` to every coefficient (e.g. dual -> eps-part).
  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Scalar&>()))>;
    ZLaurent<Out> r;
    for_each([&](int e, const Scalar& c) { r += ZLaurent<Out>::monomial(f(c), e); });
    return r;
  }

 private:
  ZLaurent& accumulate(const ZLaurent& o, bool negate) {
    if (o.is_zero()) {
      return *this;
    }
    if (is_zero()) {
      *this = negate ? -o : o;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(max_exponent(), o.max_exponent());
    if (lo < low_ || hi > max_exponent()) {
      std::vector<Scalar> grown(static_cast<std::size_t>(hi - lo + 1), Scalar{});
      for (std::size_t i = 0; i < coefs_.size(); ++i) {
        grown[static_cast<std::size_t>(low_ - lo) + i] = std::move(coefs_[i]);
      }
      coefs_ = std::move(grown);
      low_ = lo;
    }
    for (std::size_t i = 0; i < o.coefs_.size(); ++i) {
      auto& dst = coefs_[static_cast<std::size_t>(o.low_ - low_) + i];
      if (negate) {
        dst -= o.coefs_[i];
      } else {
        dst += o.coefs_[i];
      }
    }
    trim();
    return *this;
  }

  void trim() {
    std::size_t first = 0;
    while (first < coefs_.size() && qseries::is_zero(coefs_[first])) {
      ++first;
    }
    if (first == coefs_.size()) {
      coefs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coefs_.size();
    while (qseries::is_zero(coefs_[last - 1])) {
      --last;
    }
    if (first > 0 || last < coefs_.size()) {
      coefs_ = std::vector<Scalar>(std::make_move_iterator(coefs_.begin() + static_cast<std::ptrdiff_t>(first)),
                                   std::make_move_iterator(coefs_.begin() + static_cast<std::ptrdiff_t>(last)));
      low_ += static_cast<int>(first);
    }
  }

  int low_ = 0;
  std::vector<Scalar> coefs_;
};

template <class S>
bool is_zero(const ZLaurent<S>& z) {
  return z.is_zero();
}

template <class S>
std::optional<ZLaurent<S>> try_invert(const ZLaurent<S>& z) {
  return z.inverse();
}

/// Renders as "c*z^e + ..." in increasing exponent order; "0" when empty.
template <class S>
std::string to_string(const ZLaurent<S>& z) {
  if (z.is_zero()) {
    return "0";
  }
  std::string out;
  z.for_each([&](int e, const S& c) {
    if (!out.empty()) {
      out += " + ";
    }
    std::string cs = to_string(c);
    if (e == 0) {
      out += cs;
    } else {
      out += "(" + cs + ")*z^" + std::to_string(e);
    }
  });
  return out;
}

using ZLaurentQ = ZLaurent<Rational>;
using ZLaurentD = ZLaurent<DualRational>;

}  // namespace qseries
