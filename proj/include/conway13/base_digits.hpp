#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "conway13/errors.hpp"
#include "conway13/numeric.hpp"

namespace conway13 {

/// A positional-notation radix, at least 2.
class Base {
 public:
  explicit Base(int radix) : radix_(radix) {
    if (radix < 2) throw std::domain_error("Base: radix must be at least 2");
  }
  int radix() const noexcept { return radix_; }

  friend bool operator==(Base a, Base b) noexcept { return a.radix_ == b.radix_; }
  friend bool operator!=(Base a, Base b) noexcept { return a.radix_ != b.radix_; }

 private:
  int radix_;
};

/// A single digit value bound to its base; 0 <= value < radix.
class Digit {
 public:
  Digit(int value, Base base) : value_(value), base_(base) {
    if (value < 0 || value >= base.radix())
      throw std::domain_error("Digit: value out of range for base");
  }
  int value() const noexcept { return value_; }
  Base base() const noexcept { return base_; }

  friend bool operator==(const Digit& a, const Digit& b) noexcept {
    return a.value_ == b.value_ && a.base_ == b.base_;
  }

 private:
  int value_;
  Base base_;
};

/// A finite, canonical digit string in some base, most-significant digit
/// first. Canonical means no leading zeros except for the single-digit
/// string "0". Index k denotes the digit k positions left of the units
/// column; digits beyond the stored top index read as zero.
class DigitString {
 public:
  static DigitString zero(Base base) { return DigitString(base, {0}); }

  /// Validates digits against the base and strips leading zeros.
  static DigitString from_digits(std::vector<int> most_significant_first, Base base);

  Base base() const noexcept { return base_; }

  /// Stored digit count; 1 for the zero string. Distinct from the length
  /// function of the digit toolkit, which assigns 0 to the value zero.
  std::size_t size() const noexcept { return digits_.size(); }

  bool is_zero() const noexcept { return digits_.size() == 1 && digits_[0] == 0; }

  /// Top index m (size-1).
  std::size_t top_index() const noexcept { return digits_.size() - 1; }

  /// Digit at index k (k positions left of the units column); 0 beyond the top.
  int digit_at_index(std::size_t k) const noexcept {
    return k < digits_.size() ? digits_[digits_.size() - 1 - k] : 0;
  }

  /// Most-significant-first storage.
  const std::vector<int>& digits() const noexcept { return digits_; }

  friend bool operator==(const DigitString& a, const DigitString& b) {
    return a.base_ == b.base_ && a.digits_ == b.digits_;
  }
  friend bool operator!=(const DigitString& a, const DigitString& b) { return !(a == b); }

 private:
  DigitString(Base base, std::vector<int> digits) : base_(base), digits_(std::move(digits)) {}

  Base base_;
  std::vector<int> digits_;
};

/// Parses a bare digit literal (characters 0-9, A-C, case-insensitive).
/// Leading zeros are stripped. Throws ParseError with the offending position
/// on empty input, invalid characters, or digits >= radix.
DigitString parse_literal(std::string_view text, Base base);

/// A parsed literal of the full grammar `[+-]? [0-9A-Ca-c]+ (_<radix>)?`.
/// The sign is the caller's concern; the digit string itself is unsigned.
struct SignedLiteral {
  int sign = 1;  // +1 or -1
  DigitString magnitude;
};

/// Parses the full literal grammar. A `_<radix>` suffix overrides the
/// fallback base. Throws ParseError on any malformed input.
SignedLiteral parse_signed_literal(std::string_view text, Base fallback_base);

/// Uppercase canonical rendering; inverse of parse_literal.
/// Throws std::domain_error on digit values above 12 (no character exists).
std::string format_literal(const DigitString& s);

/// Value of the digit string: sum of d_k * radix^k over stored indices.
Natural to_natural(const DigitString& s);

/// Canonical digit string of x in the given base.
DigitString from_natural(const Natural& x, Base base);

/// True iff needle's digit sequence occurs contiguously in haystack's.
/// Throws std::domain_error when the bases differ.
bool contains_digit_sequence(const DigitString& needle, const DigitString& haystack);

/// The tridecimal alphabet used by the base-13 construction.
namespace tridecimal {
inline const Base base{13};
inline const Digit digit_a{10, base};
inline const Digit digit_b{11, base};
inline const Digit digit_c{12, base};
}  // namespace tridecimal

}  // namespace conway13
