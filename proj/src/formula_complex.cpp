#include <boost/multiprecision/mpfr.hpp>

#include <unordered_map>

#include "conway13/formula.hpp"

namespace conway13::ir {

namespace {

using BigFloat = boost::multiprecision::mpfr_float;

struct CF {
  BigFloat re, im;
};

struct Flagged {
  CF value;
  bool ill = false;
};

class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits);
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }

 private:
  unsigned saved_;
};

BigFloat from_rational(const Rational& q) {
  BigFloat x;
  mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return x;
}

// All operations work on the current default precision.
class ComplexEvaluator {
 public:
  ComplexEvaluator(const Bindings& bindings, double guard_band) : bindings_(bindings) {
    mpfr_const_pi(pi_.backend().data(), MPFR_RNDN);
    tau_ = 2 * pi_;
    guard_ = tau_ * BigFloat(guard_band);
  }

  Flagged eval(const ExprPtr& e) {
    auto it = memo_.find(e.get());
    if (it != memo_.end()) return it->second;
    Flagged v = compute(e);
    memo_.emplace(e.get(), v);
    return v;
  }

 private:
  static CF c_add(const CF& a, const CF& b) { return {a.re + b.re, a.im + b.im}; }
  static CF c_sub(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }
  static CF c_mul(const CF& a, const CF& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  static CF c_div(const CF& a, const CF& b) {
    const BigFloat d = b.re * b.re + b.im * b.im;
    if (d.is_zero()) throw std::domain_error("eval_complex: division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  static CF c_exp(const CF& z) {
    const BigFloat m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
  }
  static bool c_zero(const CF& z) { return z.re.is_zero() && z.im.is_zero(); }

  // Principal Log with imaginary part in [0, 2 pi). Flags evaluations
  // whose argument falls inside the guard band of the cut (the positive
  // real axis), where rounding can flip the branch.
  CF c_log(const CF& z, bool& ill) {
    if (c_zero(z)) {
      ill = true;
      return {log(BigFloat(0)), BigFloat(0)};
    }
    BigFloat theta = atan2(z.im, z.re);
    if (theta < 0) theta += tau_;
    const BigFloat dist = theta <= tau_ - theta ? theta : tau_ - theta;
    if (!dist.is_zero() && dist < guard_) ill = true;
    return {log(z.re * z.re + z.im * z.im) / 2, theta};
  }

  // a^n for integer n is branch-independent (e^(n Log a) = a^n under any
  // branch), so it is computed by exact complex powering; the Log route
  // would park squares of reals on the branch cut.
  static CF c_pow_integer(CF base, long n) {
    CF acc = {BigFloat(1), BigFloat(0)};
    const bool negative = n < 0;
    unsigned long m = negative ? 0ul - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    while (m) {
      if (m & 1) acc = c_mul(acc, base);
      base = c_mul(base, base);
      m >>= 1;
    }
    if (negative) return c_div({BigFloat(1), BigFloat(0)}, acc);
    return acc;
  }

  CF c_pow(const CF& base, const CF& exponent, bool& ill) {
    if (c_zero(base)) {
      if (c_zero(exponent)) return {BigFloat(1), BigFloat(0)};
      if (exponent.im.is_zero() && exponent.re > 0) return {BigFloat(0), BigFloat(0)};
      throw std::domain_error("eval_complex: zero base with nonpositive exponent");
    }
    if (exponent.im.is_zero() && mpfr_integer_p(exponent.re.backend().data()) &&
        abs(exponent.re) < BigFloat(1e9))
      return c_pow_integer(base, exponent.re.convert_to<long>());
    return c_exp(c_mul(exponent, c_log(base, ill)));
  }

  Flagged compute(const ExprPtr& e) {
    switch (e->kind()) {
      case ExprKind::constant:
        return {{from_rational(e->constant_value()), BigFloat(0)}, false};
      case ExprKind::input: {
        auto it = bindings_.find(e->input_name());
        if (it == bindings_.end())
          throw std::domain_error("eval_complex: unbound input " + e->input_name());
        return {{from_rational(it->second), BigFloat(0)}, false};
      }
      case ExprKind::pi: return {{pi_, BigFloat(0)}, false};
      case ExprKind::euler: return {{exp(BigFloat(1)), BigFloat(0)}, false};
      case ExprKind::imaginary: return {{BigFloat(0), BigFloat(1)}, false};
      case ExprKind::add: {
        const Flagged a = eval(e->left()), b = eval(e->right());
        return {c_add(a.value, b.value), a.ill || b.ill};
      }
      case ExprKind::subtract: {
        const Flagged a = eval(e->left()), b = eval(e->right());
        return {c_sub(a.value, b.value), a.ill || b.ill};
      }
      case ExprKind::multiply: {
        const Flagged a = eval(e->left()), b = eval(e->right());
        return {c_mul(a.value, b.value), a.ill || b.ill};
      }
      case ExprKind::divide: {
        const Flagged a = eval(e->left()), b = eval(e->right());
        return {c_div(a.value, b.value), a.ill || b.ill};
      }
      case ExprKind::power: {
        const Flagged a = eval(e->left()), b = eval(e->right());
        bool ill = a.ill || b.ill;
        const CF v = c_pow(a.value, b.value, ill);
        return {v, ill};
      }
      case ExprKind::root: {
        const Flagged a = eval(e->left());
        bool ill = a.ill;
        if (c_zero(a.value)) return {{BigFloat(0), BigFloat(0)}, ill};
        const CF h = {BigFloat(1) / 2, BigFloat(0)};
        const CF v = c_exp(c_mul(h, c_log(a.value, ill)));
        return {v, ill};
      }
      case ExprKind::log: {
        const Flagged a = eval(e->left());
        bool ill = a.ill;
        const CF v = c_log(a.value, ill);
        return {v, ill};
      }
      case ExprKind::floor:
      case ExprKind::ceil:
      case ExprKind::mod:
      case ExprKind::abs:
        throw std::domain_error("eval_complex: expression must be lowered (macro node found)");
    }
    throw std::domain_error("eval_complex: unknown node kind");
  }

  const Bindings& bindings_;
  BigFloat pi_, tau_, guard_;
  std::unordered_map<const Expr*, Flagged> memo_;
};

}  // namespace

ComplexResult eval_complex(const ExprPtr& e, const Bindings& bindings, int precision_digits,
                           double guard_band) {
  if (precision_digits < 16)
    throw std::domain_error("eval_complex: precision must be at least 16 digits");
  PrecisionGuard guard(static_cast<unsigned>(precision_digits));
  ComplexEvaluator evaluator(bindings, guard_band);
  const Flagged r = evaluator.eval(e);
  ComplexResult result;
  result.value = {r.value.re.convert_to<double>(), r.value.im.convert_to<double>()};
  result.ill_conditioned = r.ill;
  return result;
}

}  // namespace conway13::ir
