#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <utility>

namespace conway13 {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational. Always kept canonical: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero is 0/1.
using Rational = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
/// Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Nonnegative arbitrary-precision integer.
class Natural {
 public:
  Natural() : value_(0) {}
  Natural(unsigned long value) : value_(value) {}
  explicit Natural(Integer value) : value_(std::move(value)) {
    if (sgn(value_) < 0) throw std::domain_error("Natural: value must be nonnegative");
  }

  const Integer& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }

  friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Natural& a, const Natural& b) { return a.value_ != b.value_; }
  friend bool operator<(const Natural& a, const Natural& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Natural& a, const Natural& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Natural& a, const Natural& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Natural& a, const Natural& b) { return a.value_ >= b.value_; }

 private:
  Integer value_;
};

/// Greatest integer <= x.
Integer floor(const Rational& x);

/// Least integer >= x.
Integer ceil(const Rational& x);

/// Floored-division remainder: the unique r with 0 <= r < y and (x-r)/y integral.
/// Throws std::domain_error when y <= 0.
Rational mod_exact(const Rational& x, const Rational& y);

/// Nonnegative magnitude.
Rational abs_exact(const Rational& x);

/// Exact integer power. Throws std::domain_error on 0^negative.
Rational pow_int(const Rational& base, long exponent);

/// True iff x has denominator 1.
bool is_integer(const Rational& x);

/// base^e for nonnegative integer exponents.
Integer pow_uint(const Integer& base, unsigned long e);

}  // namespace conway13
