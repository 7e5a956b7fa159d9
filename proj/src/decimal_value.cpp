#include "conway13/decimal_value.hpp"

namespace conway13 {

DecimalValue DecimalValue::from_scaled(int sign, Integer units, unsigned long scale) {
  if (sgn(units) < 0) throw std::domain_error("DecimalValue: units must be nonnegative");
  if (sign < -1 || sign > 1) throw std::domain_error("DecimalValue: sign must be -1, 0 or +1");
  DecimalValue v;
  if (sgn(units) == 0) return v;  // canonical zero regardless of sign/scale
  if (sign == 0) throw std::domain_error("DecimalValue: zero sign with nonzero units");
  while (scale > 0 && mpz_divisible_ui_p(units.get_mpz_t(), 10ul)) {
    mpz_divexact_ui(units.get_mpz_t(), units.get_mpz_t(), 10ul);
    --scale;
  }
  v.sign_ = sign;
  v.units_ = std::move(units);
  v.scale_ = scale;
  return v;
}

DecimalValue DecimalValue::from_rational(const Rational& value) {
  const int sign = sgn(value);
  if (sign == 0) return DecimalValue();
  Integer num = abs(Integer(value.get_num()));
  Integer den = value.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2ul)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2ul);
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5ul)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5ul);
    ++fives;
  }
  if (den != 1)
    throw InternalError("DecimalValue: denominator is not a power of ten after reduction");
  const unsigned long scale = twos > fives ? twos : fives;
  Integer units = num * pow_uint(Integer(2), scale - twos) * pow_uint(Integer(5), scale - fives);
  return from_scaled(sign, std::move(units), scale);
}

Integer DecimalValue::denominator() const {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10ul, scale_);
  return d;
}

Rational DecimalValue::as_rational() const {
  return make_rational(numerator(), denominator());
}

std::string DecimalValue::to_decimal_string() const {
  if (sign_ == 0) return "0";
  Integer ip, fp;
  const Integer den = denominator();
  mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), units_.get_mpz_t(), den.get_mpz_t());
  std::string out;
  if (sign_ < 0) out.push_back('-');
  out += ip.get_str(10);
  if (scale_ > 0) {
    std::string frac = fp.get_str(10);
    out.push_back('.');
    out.append(scale_ - frac.size(), '0');
    out += frac;
  }
  return out;
}

}  // namespace conway13
