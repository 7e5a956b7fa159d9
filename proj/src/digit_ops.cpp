#include "conway13/digit_ops.hpp"

#include "conway13/logic.hpp"

namespace conway13 {

namespace {

void require_digit_in_base(const Digit& p, Base b) {
  if (p.base() != b) throw std::domain_error("digit out of range: base mismatch");
}

}  // namespace

Natural trunc_trailing(const Natural& x, Base b, unsigned long n) {
  const Integer divisor = pow_uint(Integer(b.radix()), n);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.value().get_mpz_t(), divisor.get_mpz_t());
  return Natural(std::move(q));
}

Digit digit_at(const Natural& x, Base b, unsigned long n) {
  const Natural t = trunc_trailing(x, b, n);
  const Natural t1 = trunc_trailing(x, b, n + 1);
  const Integer d = t.value() - b.radix() * t1.value();
  return Digit(static_cast<int>(d.get_si()), b);
}

std::size_t length(const Natural& x, Base b) {
  std::size_t count = 0;
  Integer t = x.value();
  while (sgn(t) > 0) {
    mpz_fdiv_q_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(b.radix()));
    ++count;
  }
  return count;
}

std::size_t count_occurrences(const Natural& x, Base b, const Digit& p) {
  require_digit_in_base(p, b);
  const std::size_t len = length(x, b);
  Integer total = 0;
  for (std::size_t k = 0; k < len; ++k)
    total += equal_indicator(digit_at(x, b, k).value(), p.value());
  return static_cast<std::size_t>(total.get_ui());
}

std::size_t rightmost_index(const Natural& x, Base b, const Digit& p) {
  require_digit_in_base(p, b);
  const std::size_t len = length(x, b);
  const Integer occurrences(static_cast<unsigned long>(count_occurrences(x, b, p)));
  Integer total = 0;
  for (std::size_t k = 1; k <= len; ++k) {
    const std::size_t truncated =
        count_occurrences(trunc_trailing(x, b, static_cast<unsigned long>(k)), b, p);
    total += equal_indicator(Integer(static_cast<unsigned long>(truncated)), occurrences);
  }
  return static_cast<std::size_t>(total.get_ui());
}

Natural trunc_leading(const Natural& x, Base b, unsigned long n) {
  const std::size_t len = length(x, b);
  Integer sum = 0;
  if (len > n) {
    const std::size_t upper = len - n;  // digits at indices 0 .. L-n-1
    for (std::size_t k = 0; k < upper; ++k)
      sum += pow_uint(Integer(b.radix()), k) * digit_at(x, b, k).value();
  }
  return Natural(std::move(sum));
}

Natural cut_to_index(const Natural& x, Base b, const Digit& p) {
  const std::size_t idx = rightmost_index(x, b, p);
  Integer sum = 0;
  for (std::size_t k = 0; k <= idx; ++k)
    sum += pow_uint(Integer(b.radix()), k) * digit_at(x, b, k).value();
  return Natural(std::move(sum));
}

}  // namespace conway13
