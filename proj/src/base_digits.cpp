#include "conway13/base_digits.hpp"

#include <algorithm>
#include <charconv>

namespace conway13 {

namespace {

constexpr char kAlphabet[] = "0123456789ABC";

int char_to_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'C') return c - 'A' + 10;
  if (c >= 'a' && c <= 'c') return c - 'a' + 10;
  return -1;
}

std::vector<int> parse_digit_run(std::string_view text, std::size_t offset, Base base) {
  std::vector<int> digits;
  digits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int d = char_to_digit(text[i]);
    if (d < 0)
      throw ParseError("invalid digit character '" + std::string(1, text[i]) + "' at position " +
                           std::to_string(offset + i),
                       offset + i);
    if (d >= base.radix())
      throw ParseError("digit '" + std::string(1, text[i]) + "' out of range for base " +
                           std::to_string(base.radix()) + " at position " +
                           std::to_string(offset + i),
                       offset + i);
    digits.push_back(d);
  }
  return digits;
}

}  // namespace

DigitString DigitString::from_digits(std::vector<int> most_significant_first, Base base) {
  for (int d : most_significant_first)
    if (d < 0 || d >= base.radix())
      throw std::domain_error("DigitString: digit out of range for base");
  auto first_nonzero = std::find_if(most_significant_first.begin(), most_significant_first.end(),
                                    [](int d) { return d != 0; });
  most_significant_first.erase(most_significant_first.begin(), first_nonzero);
  if (most_significant_first.empty()) most_significant_first.push_back(0);
  return DigitString(base, std::move(most_significant_first));
}

DigitString parse_literal(std::string_view text, Base base) {
  if (text.empty()) throw ParseError("empty digit literal", 0);
  return DigitString::from_digits(parse_digit_run(text, 0, base), base);
}

SignedLiteral parse_signed_literal(std::string_view text, Base fallback_base) {
  if (text.empty()) throw ParseError("empty literal", 0);
  std::size_t pos = 0;
  int sign = 1;
  if (text[0] == '+' || text[0] == '-') {
    sign = text[0] == '-' ? -1 : 1;
    pos = 1;
  }
  Base base = fallback_base;
  std::string_view digit_part = text.substr(pos);
  const std::size_t underscore = text.find('_', pos);
  if (underscore != std::string_view::npos) {
    digit_part = text.substr(pos, underscore - pos);
    const std::string_view radix_part = text.substr(underscore + 1);
    if (radix_part.empty()) throw ParseError("missing radix after '_'", underscore + 1);
    int radix = 0;
    const auto [end, ec] =
        std::from_chars(radix_part.data(), radix_part.data() + radix_part.size(), radix);
    if (ec != std::errc() || end != radix_part.data() + radix_part.size())
      throw ParseError("malformed radix suffix", underscore + 1);
    if (radix < 2)
      throw ParseError("radix must be at least 2", underscore + 1);
    base = Base(radix);
  }
  if (digit_part.empty()) throw ParseError("literal has no digits", pos);
  return SignedLiteral{sign, DigitString::from_digits(parse_digit_run(digit_part, pos, base), base)};
}

std::string format_literal(const DigitString& s) {
  std::string out;
  out.reserve(s.size());
  for (int d : s.digits()) {
    if (d > 12) throw std::domain_error("format_literal: no character for digit value > 12");
    out.push_back(kAlphabet[d]);
  }
  return out;
}

Natural to_natural(const DigitString& s) {
  Integer v = 0;
  for (int d : s.digits()) v = v * s.base().radix() + d;
  return Natural(std::move(v));
}

DigitString from_natural(const Natural& x, Base base) {
  if (x.is_zero()) return DigitString::zero(base);
  std::vector<int> digits;
  Integer t = x.value();
  while (sgn(t) > 0) {
    const unsigned long r = mpz_fdiv_q_ui(t.get_mpz_t(), t.get_mpz_t(),
                                          static_cast<unsigned long>(base.radix()));
    digits.push_back(static_cast<int>(r));
  }
  std::reverse(digits.begin(), digits.end());
  return DigitString::from_digits(std::move(digits), base);
}

bool contains_digit_sequence(const DigitString& needle, const DigitString& haystack) {
  if (needle.base() != haystack.base())
    throw std::domain_error("contains_digit_sequence: base mismatch");
  const auto& n = needle.digits();
  const auto& h = haystack.digits();
  return std::search(h.begin(), h.end(), n.begin(), n.end()) != h.end();
}

}  // namespace conway13
