#include "conway13/logic.hpp"

namespace conway13 {

namespace {

// Bound on exponents evaluated literally. For any epsilon > 0 the floor
// argument is pinned inside (0,1) once |a-b| >= 1 (E), and inside
// (1/2,1) or (1,3/2) once |b-a| >= 1 (GE), so past the bound the
// formula's value is already forced; evaluating (1+eps)^n there would
// only burn memory (n can reach 13^40 via minimum()).
constexpr long kLiteralExponentLimit = 4096;

}  // namespace

Integer equal_indicator(const Integer& a, const Integer& b, const LogicConfig& cfg) {
  const Integer difference = abs(a - b);
  if (difference > kLiteralExponentLimit) return 0;
  const long n = difference.get_si();
  // floor((1+eps)^(-|a-b|))
  return floor(pow_int(cfg.epsilon() + 1, -n));
}

Integer not_equal_indicator(const Integer& a, const Integer& b, const LogicConfig& cfg) {
  return 1 - equal_indicator(a, b, cfg);
}

Integer ge_indicator(const Integer& a, const Integer& b, const LogicConfig& cfg) {
  const Integer exponent = b - a;
  if (exponent > kLiteralExponentLimit) return 0;
  if (exponent < -kLiteralExponentLimit) return 1;
  // floor(1/2 + 1/(1+(1+eps)^(b-a)))
  const Rational t = pow_int(cfg.epsilon() + 1, exponent.get_si());
  return floor(Rational(1, 2) + Rational(1) / (Rational(1) + t));
}

Integer minimum(const Integer& a, const Integer& b, const LogicConfig& cfg) {
  // a*GE(b,a) + b*GE(a,b) - a*E(a,b)
  return a * ge_indicator(b, a, cfg) + b * ge_indicator(a, b, cfg) - a * equal_indicator(a, b, cfg);
}

}  // namespace conway13
