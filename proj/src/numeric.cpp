#include "conway13/numeric.hpp"

namespace conway13 {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r;
  mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
  mpq_canonicalize(r.get_mpq_t());
  return r;
}

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
  return q;
}

Rational mod_exact(const Rational& x, const Rational& y) {
  if (y <= 0) throw std::domain_error("mod_exact: modulus must be positive");
  const Rational quotient = x / y;
  return x - Rational(floor(quotient)) * y;
}

Rational abs_exact(const Rational& x) {
  Rational r;
  mpq_abs(r.get_mpq_t(), x.get_mpq_t());
  return r;
}

Rational pow_int(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (sgn(base) == 0) {
    if (exponent < 0) throw std::domain_error("pow_int: zero base with negative exponent");
    return Rational(0);
  }
  const unsigned long magnitude =
      exponent < 0 ? 0ul - static_cast<unsigned long>(exponent) : static_cast<unsigned long>(exponent);
  // Coprimality of num/den is preserved by powering, so no re-canonicalization.
  Rational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), magnitude);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), magnitude);
  if (exponent < 0) mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  return r;
}

bool is_integer(const Rational& x) {
  return mpz_cmp_ui(mpq_denref(x.get_mpq_t()), 1ul) == 0;
}

Integer pow_uint(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace conway13
