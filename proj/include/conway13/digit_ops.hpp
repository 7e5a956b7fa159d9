#pragma once

#include <cstddef>

#include "conway13/base_digits.hpp"
#include "conway13/numeric.hpp"

namespace conway13 {

// The seven digit-manipulation functions on base-b expansions of
// nonnegative integers. All are pure; digit parameters are validated
// against the base argument (mismatch -> std::domain_error).

/// Removes the rightmost n digits: floor(x / b^n).
Natural trunc_trailing(const Natural& x, Base b, unsigned long n);

/// Digit at index n; 0 beyond the top index.
Digit digit_at(const Natural& x, Base b, unsigned long n);

/// Number of digits of x in base b; 0 for x = 0. Computed by exact
/// repeated division (equals ceil(log_b(x+1)); the log form is asserted
/// equal in tests, never evaluated in floating point).
std::size_t length(const Natural& x, Base b);

/// Number of occurrences of digit p in the expansion of x.
std::size_t count_occurrences(const Natural& x, Base b, const Digit& p);

/// Index of the rightmost occurrence of p, or length(x, b) when p does
/// not occur.
std::size_t rightmost_index(const Natural& x, Base b, const Digit& p);

/// Removes the leading n digits: reassembles indices 0 .. L-n-1.
Natural trunc_leading(const Natural& x, Base b, unsigned long n);

/// Keeps digits at indices 0 .. rightmost_index(x, b, p) inclusive; the
/// occurrence of p becomes the leading digit. Returns x when p is absent.
Natural cut_to_index(const Natural& x, Base b, const Digit& p);

}  // namespace conway13
