#pragma once

#include <optional>
#include <string>

#include "qseries/rational.hpp"

namespace qseries {

/// value + deriv*eps with eps^2 = 0. Setting x = 1 + eps in a series and
/// reading the eps-part gives the exact derivative at x = 1.
class DualRational {
 public:
  DualRational() = default;
  DualRational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  DualRational(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  DualRational(Rational v, Rational d) : value_(std::move(v)), deriv_(std::move(d)) {}

  static DualRational epsilon() { return {Rational(0), Rational(1)}; }

  const Rational& value() const { return value_; }
  const Rational& deriv() const { return deriv_; }

  bool is_zero() const { return value_.is_zero() && deriv_.is_zero(); }

  /// Defined iff value != 0: (a + b eps)^-1 = a^-1 - (b/a^2) eps.
  std::optional<DualRational> inverse() const {
    auto inv = value_.inverse();
    if (!inv) {
      return std::nullopt;
    }
    return DualRational(*inv, -(deriv_ * *inv * *inv));
  }

  DualRational& operator+=(const DualRational& o) {
    value_ += o.value_;
    deriv_ += o.deriv_;
    return *this;
  }
  DualRational& operator-=(const DualRational& o) {
    value_ -= o.value_;
    deriv_ -= o.deriv_;
    return *this;
  }
  DualRational& operator*=(const DualRational& o) {
    deriv_ = value_ * o.deriv_ + deriv_ * o.value_;
    value_ *= o.value_;
    return *this;
  }

  friend DualRational operator+(DualRational a, const DualRational& b) { return a += b; }
  friend DualRational operator-(DualRational a, const DualRational& b) { return a -= b; }
  friend DualRational operator*(DualRational a, const DualRational& b) { return a *= b; }
  friend DualRational operator-(const DualRational& a) { return {-a.value_, -a.deriv_}; }
  friend bool operator==(const DualRational&, const DualRational&) = default;

 private:
  Rational value_;
  Rational deriv_;
};

inline bool is_zero(const DualRational& d) { return d.is_zero(); }
inline std::optional<DualRational> try_invert(const DualRational& d) { return d.inverse(); }
inline std::string to_string(const DualRational& d) {
  if (d.deriv().is_zero()) {
    return d.value().str();
  }
  return d.value().str() + "+" + d.deriv().str() + "*eps";
}

}  // namespace qseries
