#pragma once

#include "conway13/base_digits.hpp"
#include "conway13/decimal_value.hpp"
#include "conway13/digit_ops.hpp"
#include "conway13/numeric.hpp"

namespace conway13 {

/// Deletes the unique occurrence of `marker` from the base-`from`
/// expansion of x and reinterprets the surrounding digits in base `to`,
/// with the marker's position as the radix point. With zero or multiple
/// occurrences the returned value is deterministic but not contractual.
Rational re_radix(const Natural& x, Base from, Base to, const Digit& marker);

/// +1 when plus_marker occurs exactly once and minus_marker does not,
/// -1 in the mirrored case, 0 otherwise.
int resulting_sign(const Natural& x, Base b, const Digit& plus_marker, const Digit& minus_marker);

/// Truncates |x| at its rightmost A-or-B tridecimal digit (keeps that
/// digit and everything below); |x| itself when neither occurs.
Natural phase1(const Integer& x);

/// phase1(x) when its expansion contains exactly one C, else 0.
Natural phase2(const Integer& x);

/// The base-13 function value of the integer x: sign from the leftover
/// A/B, magnitude from re-reading the digits around the leftover C as a
/// decimal; 0 when x matches neither shape.
DecimalValue phase3(const Integer& x);

/// A point y / 13^n in canonical form (13 does not divide y while n > 0;
/// zero is 0 / 13^0).
class Z13Point {
 public:
  Z13Point() = default;  // zero
  Z13Point(Integer numerator, unsigned long exponent);

  const Integer& numerator() const noexcept { return numerator_; }
  unsigned long exponent() const noexcept { return exponent_; }

  friend bool operator==(const Z13Point& a, const Z13Point& b) {
    return a.exponent_ == b.exponent_ && a.numerator_ == b.numerator_;
  }

 private:
  Integer numerator_ = 0;
  unsigned long exponent_ = 0;
};

/// Extension to Z[1/13] via the scale symmetry f(13^n x) = f(x).
DecimalValue eval_z13(const Z13Point& x);

/// The canonical tridecimal preimage of a nonzero terminating decimal:
/// [A or B] ++ integer-part digits ++ C ++ fractional digits.
/// phase3(encode_decimal(v)) = v. Throws std::domain_error for v = 0.
Natural encode_decimal(const DecimalValue& v);

namespace detail {

/// Exponent rule of the re-radix sum. `adjust_above_marker` subtracts 1
/// for digits above (left of) the marker, which makes the marker act as
/// a radix point; `adjust_below_marker` is the mirrored, wrong order,
/// kept available for mutation testing.
enum class ReRadixExponentRule { adjust_above_marker, adjust_below_marker };

Rational re_radix_with_rule(const Natural& x, Base from, Base to, const Digit& marker,
                            ReRadixExponentRule rule);
DecimalValue phase3_with_rule(const Integer& x, ReRadixExponentRule rule);

}  // namespace detail

}  // namespace conway13
