#pragma once

#include <string>

#include "conway13/errors.hpp"
#include "conway13/numeric.hpp"

namespace conway13 {

/// A signed exact value whose magnitude is units / 10^scale with minimal
/// scale (units not divisible by 10 unless scale is 0). sign = 0 iff the
/// value is zero.
class DecimalValue {
 public:
  DecimalValue() = default;  // zero

  /// value = sign * units / 10^scale, canonicalized (trailing zero
  /// cancellation, zero collapse). sign must be 0 or +-1 and consistent
  /// with units.
  static DecimalValue from_scaled(int sign, Integer units, unsigned long scale);

  /// Exact conversion. Throws InternalError when the reduced denominator
  /// has a prime factor other than 2 and 5 (no terminating expansion).
  static DecimalValue from_rational(const Rational& value);

  int sign() const noexcept { return sign_; }
  const Integer& units() const noexcept { return units_; }
  unsigned long scale() const noexcept { return scale_; }

  bool is_zero() const noexcept { return sign_ == 0; }

  Integer numerator() const { return sign_ < 0 ? Integer(-units_) : units_; }
  Integer denominator() const;  // 10^scale

  /// Fully reduced signed rational (e.g. 3.14 -> 157/50).
  Rational as_rational() const;

  /// Plain decimal rendering: "-17.11", "3.14", "0". Exactly `scale`
  /// fractional digits; no sign for nonnegative values.
  std::string to_decimal_string() const;

  friend bool operator==(const DecimalValue& a, const DecimalValue& b) {
    return a.sign_ == b.sign_ && a.scale_ == b.scale_ && a.units_ == b.units_;
  }
  friend bool operator!=(const DecimalValue& a, const DecimalValue& b) { return !(a == b); }

 private:
  int sign_ = 0;
  Integer units_ = 0;
  unsigned long scale_ = 0;
};

}  // namespace conway13
