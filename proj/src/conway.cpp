#include "conway13/conway.hpp"

#include "conway13/logic.hpp"

namespace conway13 {

using tridecimal::digit_a;
using tridecimal::digit_b;
using tridecimal::digit_c;

namespace detail {

Rational re_radix_with_rule(const Natural& x, Base from, Base to, const Digit& marker,
                            ReRadixExponentRule rule) {
  if (marker.base() != from) throw std::domain_error("digit out of range: base mismatch");
  const long len = static_cast<long>(length(x, from));
  const long idx = static_cast<long>(rightmost_index(x, from, marker));
  Rational sum(0);
  for (long k = 0; k < len; ++k) {
    const int dk = digit_at(x, from, static_cast<unsigned long>(k)).value();
    const Integer keep = not_equal_indicator(dk, marker.value());
    const Integer adjust = rule == ReRadixExponentRule::adjust_above_marker
                               ? ge_indicator(k, idx)
                               : ge_indicator(idx, k);
    const long exponent = k - idx - adjust.get_si();
    sum += Rational(keep * dk) * pow_int(Rational(to.radix()), exponent);
  }
  return sum;
}

DecimalValue phase3_with_rule(const Integer& x, ReRadixExponentRule rule) {
  const Natural f2 = phase2(x);
  const int s = resulting_sign(f2, tridecimal::base, digit_a, digit_b);
  const Rational magnitude =
      re_radix_with_rule(trunc_leading(f2, tridecimal::base, 1), tridecimal::base, Base(10),
                         digit_c, rule);
  return DecimalValue::from_rational(Rational(s) * magnitude);
}

}  // namespace detail

Rational re_radix(const Natural& x, Base from, Base to, const Digit& marker) {
  return detail::re_radix_with_rule(x, from, to, marker,
                                    detail::ReRadixExponentRule::adjust_above_marker);
}

int resulting_sign(const Natural& x, Base b, const Digit& plus_marker,
                   const Digit& minus_marker) {
  const Integer plus(static_cast<unsigned long>(count_occurrences(x, b, plus_marker)));
  const Integer minus(static_cast<unsigned long>(count_occurrences(x, b, minus_marker)));
  const Integer s = equal_indicator(plus, 1) - equal_indicator(minus, 1);
  return static_cast<int>(s.get_si());
}

Natural phase1(const Integer& x) {
  const Natural magnitude{Integer(abs(x))};
  const Natural cut_a = cut_to_index(magnitude, tridecimal::base, digit_a);
  const Natural cut_b = cut_to_index(magnitude, tridecimal::base, digit_b);
  return Natural(minimum(cut_a.value(), cut_b.value()));
}

Natural phase2(const Integer& x) {
  const Natural f1 = phase1(x);
  const Integer c_count(
      static_cast<unsigned long>(count_occurrences(f1, tridecimal::base, digit_c)));
  return Natural(f1.value() * equal_indicator(c_count, 1));
}

DecimalValue phase3(const Integer& x) {
  return detail::phase3_with_rule(x, detail::ReRadixExponentRule::adjust_above_marker);
}

Z13Point::Z13Point(Integer numerator, unsigned long exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  if (sgn(numerator_) == 0) {
    exponent_ = 0;
    return;
  }
  while (exponent_ > 0 && mpz_divisible_ui_p(numerator_.get_mpz_t(), 13ul)) {
    mpz_divexact_ui(numerator_.get_mpz_t(), numerator_.get_mpz_t(), 13ul);
    --exponent_;
  }
}

DecimalValue eval_z13(const Z13Point& x) {
  return phase3(x.numerator());
}

Natural encode_decimal(const DecimalValue& v) {
  if (v.sign() == 0) throw std::domain_error("encode_decimal: zero has no canonical preimage");
  Integer ip, fp;
  const Integer den = v.denominator();
  mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), v.units().get_mpz_t(), den.get_mpz_t());
  std::vector<int> digits;
  digits.push_back(v.sign() > 0 ? digit_a.value() : digit_b.value());
  for (char c : ip.get_str(10)) digits.push_back(c - '0');
  digits.push_back(digit_c.value());
  const std::string frac = fp.get_str(10);
  for (std::size_t i = frac.size(); i < v.scale(); ++i) digits.push_back(0);
  if (v.scale() > 0)
    for (char c : frac) digits.push_back(c - '0');
  return to_natural(DigitString::from_digits(std::move(digits), tridecimal::base));
}

}  // namespace conway13
